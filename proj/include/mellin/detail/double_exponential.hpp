#pragma once

// Trapezoidal rule on doubly-exponentially decaying integrands over the real
// line, refined by halving the step. Integrands are supplied in log space so
// that nodes far into the tails (where the original variable under- or
// overflows) are still evaluated without loss.

#include <cmath>
#include <limits>
#include <numbers>

#include "mellin/quadrature.hpp"

namespace mellin::quadrature::detail {

inline constexpr double kInitialStep = 1.0;
// Tails of x^(l-1)-type singularities need |t| ~ ln(1/l); 40 covers l >~ 1e-16.
inline constexpr double kMaxAbscissa = 40.0;
inline constexpr double kTailCutoff = 1e-20;  // relative to the peak node value
inline constexpr int kMinLevel = 2;

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// g(t) is the transformed integrand including the Jacobian; must be finite.
template <class G>
QuadratureResult trapezoid(G&& g, const QuadratureConfig& cfg) {
  validate(cfg);

  // Level 0: walk outward from t = 0 until the tail is negligible.
  CompensatedSum total;
  CompensatedSum total_abs;
  const double g0 = g(0.0);
  total.add(g0);
  total_abs.add(std::abs(g0));
  double peak = std::abs(g0);

  double edge[2] = {kMaxAbscissa, kMaxAbscissa};
  bool truncated = false;  // a tail had not decayed by kMaxAbscissa
  for (int side = 0; side < 2; ++side) {
    const double dir = side == 0 ? 1.0 : -1.0;
    double prev = std::abs(g0);
    bool decayed = false;
    for (int j = 1; j * kInitialStep <= kMaxAbscissa; ++j) {
      const double t = dir * j * kInitialStep;
      const double v = g(t);
      total.add(v);
      total_abs.add(std::abs(v));
      const double a = std::abs(v);
      if (a > peak) peak = a;
      if (j >= 2 && a <= prev && a <= kTailCutoff * peak) {
        edge[side] = j * kInitialStep;
        decayed = true;
        break;
      }
      prev = a;
    }
    truncated = truncated || !decayed;
  }

  double h = kInitialStep;
  double estimate = h * total.value();
  // Round-off floor for the error estimate, fixed on the level-0 grid so the
  // reported estimate cannot grow once the level differences reach it.
  const double roundoff =
      16.0 * std::numeric_limits<double>::epsilon() * h * total_abs.value();
  QuadratureResult r;
  r.value = estimate;
  r.error_estimate = std::numeric_limits<double>::infinity();
  r.levels_used = 0;

  for (int level = 1; level <= cfg.max_levels; ++level) {
    h *= 0.5;
    // New nodes are odd multiples of h inside (-edge[1], edge[0]).
    for (long i = 1;; i += 2) {
      const double t = static_cast<double>(i) * h;
      if (t >= edge[0] && t >= edge[1]) break;
      if (t < edge[0]) total.add(g(t));
      if (t < edge[1]) total.add(g(-t));
    }
    const double next = h * total.value();
    r.error_estimate = std::max(std::abs(next - estimate), roundoff);
    r.value = next;
    r.levels_used = level;
    estimate = next;
    if (level >= kMinLevel && !truncated &&
        r.error_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(next))) {
      r.converged = true;
      break;
    }
  }
  return r;
}

// int_0^inf f(x) dx with x = exp(pi/2 sinh t). log_f(x, log_x) returns
// ln f(x); x may be 0 or subnormal while log_x stays exact.
template <class LogF>
QuadratureResult exp_sinh(LogF&& log_f, const QuadratureConfig& cfg) {
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  constexpr double kLogOverflow = 708.0;
  auto g = [&](double t) {
    const double log_x = kHalfPi * std::sinh(t);
    if (log_x > kLogOverflow) return 0.0;
    const double x = std::exp(log_x);
    const double log_jac = std::log(kHalfPi * std::cosh(t)) + log_x;
    const double lf = log_f(x, log_x);
    if (std::isinf(lf) && lf < 0) return 0.0;
    return std::exp(lf + log_jac);
  };
  return trapezoid(g, cfg);
}

// int_0^1 f(x) dx with x = 1 / (1 + exp(-pi sinh t)). log_f(x, log_x,
// log_1mx) returns ln f(x); both endpoint distances are supplied in log form.
template <class LogF>
QuadratureResult tanh_sinh_unit(LogF&& log_f, const QuadratureConfig& cfg) {
  auto softplus = [](double y) {
    return y > 0.0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y));
  };
  auto g = [&](double t) {
    const double v = std::numbers::pi * std::sinh(t);
    const double log_x = -softplus(-v);
    const double log_1mx = -softplus(v);
    const double x = 1.0 / (1.0 + std::exp(-v));
    const double log_jac = std::log(std::numbers::pi * std::cosh(t)) + log_x + log_1mx;
    const double lf = log_f(x, log_x, log_1mx);
    if (std::isinf(lf) && lf < 0) return 0.0;
    return std::exp(lf + log_jac);
  };
  return trapezoid(g, cfg);
}

}  // namespace mellin::quadrature::detail
