#include "mellin/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mellin/detail/double_exponential.hpp"
#include "mellin/errors.hpp"

namespace mellin::quadrature {
namespace {

// ln(e^u - 1) given u and ln u.
double log_expm1(double u, double log_u) {
  if (log_u < -20.0) return log_u + 0.5 * u;
  if (u > 40.0) return u + std::log1p(-std::exp(-u));
  return std::log(std::expm1(u));
}

// ln(-ln(1 - t)) given ln t and ln(1 - t).
double log_neg_log1m(double log_t, double log_1mt) {
  if (log_t < -30.0) return log_t + 0.5 * std::exp(log_t);
  return std::log(-log_1mt);
}

QuadratureResult finish(QuadratureResult r, const std::string& what) {
  if (!r.converged) {
    throw ConvergenceError(what + ": no convergence after " +
                               std::to_string(r.levels_used) +
                               " levels (error estimate " +
                               std::to_string(r.error_estimate) + ")",
                           r);
  }
  return r;
}

}  // namespace

void validate(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
  if (cfg.max_levels < 1 || cfg.max_levels > 12) {
    throw DomainError("max_levels must lie in [1, 12], got " +
                      std::to_string(cfg.max_levels));
  }
}

QuadratureResult integrate_transform(const TransformParams& p,
                                     const QuadratureConfig& cfg) {
  const double lm1 = p.l() - 1.0;
  const double m = p.m();
  const double n = static_cast<double>(p.n());
  auto log_f = [=](double u, double log_u) {
    return lm1 * log_expm1(u, log_u) - m * u + n * log_u;
  };
  QuadratureResult r = detail::exp_sinh(log_f, cfg);
  r.near_boundary = p.near_boundary();
  return finish(r, "integrate_transform");
}

QuadratureResult integrate_transform_xspace(const TransformParams& p,
                                            const QuadratureConfig& cfg) {
  const double lm1 = p.l() - 1.0;
  const double m_minus_l = p.m() - p.l();
  const int n = p.n();
  auto log_f = [=](double, double log_t, double log_1mt) {
    double lf = lm1 * log_t + m_minus_l * log_1mt;
    if (n > 0) lf += n * log_neg_log1m(log_t, log_1mt);
    return lf;
  };
  QuadratureResult r = detail::tanh_sinh_unit(log_f, cfg);
  r.near_boundary = p.near_boundary();
  return finish(r, "integrate_transform_xspace");
}

QuadratureResult integrate_bose(int n, const QuadratureConfig& cfg) {
  if (n < 1) {
    throw DomainError("integrate_bose: n must be >= 1, got " + std::to_string(n));
  }
  const double nd = static_cast<double>(n);
  auto log_f = [=](double x, double log_x) { return nd * log_x - log_expm1(x, log_x); };
  return finish(detail::exp_sinh(log_f, cfg), "integrate_bose");
}

bool self_check(const QuadratureConfig& cfg) {
  struct Case {
    QuadratureResult result;
    double exact;
  };
  try {
    validate(cfg);
  } catch (const DomainError&) {
    return false;
  }
  constexpr double kCheckTol = 1e-11;
  // The refinement budget comes from cfg; the stopping tolerance never exceeds
  // what the calibration bar needs.
  const QuadratureConfig run{std::min(cfg.abs_tol, 0.1 * kCheckTol),
                             std::min(cfg.rel_tol, 0.1 * kCheckTol), cfg.max_levels};
  const Case cases[] = {
      {detail::exp_sinh([](double x, double) { return -x; }, run), 1.0},
      {detail::exp_sinh([](double x, double log_x) { return -0.5 * log_x - x; }, run),
       std::sqrt(std::numbers::pi)},
      {detail::tanh_sinh_unit([](double, double log_x, double) { return -0.5 * log_x; },
                              run),
       2.0},
  };
  for (const auto& c : cases) {
    if (!c.result.converged) return false;
    if (std::abs(c.result.value - c.exact) > kCheckTol * std::abs(c.exact)) return false;
  }
  return true;
}

}  // namespace mellin::quadrature
