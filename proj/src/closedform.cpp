#include "mellin/closedform.hpp"

#include <cmath>
#include <string>

#include "mellin/bellpoly.hpp"
#include "mellin/errors.hpp"
#include "mellin/specfun.hpp"

namespace mellin {

TransformParams::TransformParams(int n, double l, double m) : n_(n), l_(l), m_(m) {
  if (n < 0 || static_cast<std::size_t>(n) > bellpoly::kMaxDegree) {
    throw DomainError("log power n must lie in [0, " +
                      std::to_string(bellpoly::kMaxDegree) + "], got " +
                      std::to_string(n));
  }
  if (!std::isfinite(l) || !std::isfinite(m)) {
    throw DomainError("parameters l and m must be finite");
  }
  // Integrand ~ x^(l-1) at 0 and ~ x^(l-m-2) log^n x at infinity.
  if (!(l > 0.0) || !(l < m + 1.0)) {
    throw DomainError("integral diverges: need 0 < l < m + 1, got l = " +
                      std::to_string(l) + ", m = " + std::to_string(m));
  }
}

bool TransformParams::near_boundary() const {
  constexpr double kMargin = 1e-3;
  return l_ < kMargin || (m_ + 1.0 - l_) < kMargin;
}

namespace closedform {
namespace {

// Below this ratio l / (m+1) the differences are summed from their Taylor
// series in l, which has same-sign terms, instead of subtracting two nearly
// equal function values.
constexpr double kSeriesRatio = 0.1;
constexpr int kMaxSeriesTerms = 1000;

// zeta(j, a) - zeta(j, a - l) for j >= 2, or psi(a - l) - psi(a) for j = 1.
// Both equal -sum_{k>=1} C(j+k-1, k) l^k zeta(j+k, a).
double s_argument(int j, double a, double l) {
  if (l > kSeriesRatio * a) {
    const double lower = a - l;
    return j == 1 ? specfun::digamma(lower) - specfun::digamma(a)
                  : specfun::hurwitz_zeta(j, a) - specfun::hurwitz_zeta(j, lower);
  }
  double sum = 0.0;
  double weight = 1.0;  // C(j+k-1, k) l^k
  for (int k = 1; k <= kMaxSeriesTerms; ++k) {
    weight *= l * static_cast<double>(j + k - 1) / static_cast<double>(k);
    const double term = weight * specfun::hurwitz_zeta(j + k, a);
    sum += term;
    if (term <= 1e-17 * sum) break;
  }
  return -sum;
}

}  // namespace

PnArguments build_s_arguments(const TransformParams& p) {
  const double upper = p.m() + 1.0;
  PnArguments s;
  s.reserve(static_cast<std::size_t>(p.n()));
  for (int j = 1; j <= p.n(); ++j) s.push_back(s_argument(j, upper, p.l()));
  return s;
}

ClosedFormResult evaluate(const TransformParams& p) {
  ClosedFormResult r;
  r.s_args = build_s_arguments(p);
  r.pn_value = bellpoly::p_polynomial(r.s_args);
  r.log_prefactor = specfun::log_gamma(p.m() + 1.0 - p.l()) +
                    specfun::log_gamma(p.l()) - specfun::log_gamma(p.m() + 1.0);
  const double signed_pn = (p.n() % 2 == 0) ? r.pn_value : -r.pn_value;
  r.value = signed_pn * std::exp(r.log_prefactor);
  return r;
}

double evaluate_n1(double l, double m) {
  const TransformParams p(1, l, m);
  const double upper = p.m() + 1.0;
  const double lower = p.m() + 1.0 - p.l();
  const double log_beta = specfun::log_gamma(lower) + specfun::log_gamma(p.l()) -
                          specfun::log_gamma(upper);
  return -s_argument(1, upper, p.l()) * std::exp(log_beta);
}

}  // namespace closedform
}  // namespace mellin
