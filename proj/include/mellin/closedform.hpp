#pragma once

#include <vector>

namespace mellin {

/// One instance of I(n, l, m) = int_0^inf x^(l-1) log^n(1+x) / (1+x)^(m+1) dx.
///
/// Construction enforces convergence, 0 < l < m + 1, and n <= 30; the
/// boundary values are rejected with DomainError.
class TransformParams {
 public:
  TransformParams(int n, double l, double m);

  int n() const { return n_; }
  double l() const { return l_; }
  double m() const { return m_; }

  /// l within 1e-3 of either end of (0, m+1): the integral converges, but
  /// slowly enough at an endpoint that quadrature is expensive.
  bool near_boundary() const;

 private:
  int n_;
  double l_;
  double m_;
};

using PnArguments = std::vector<double>;

namespace closedform {

struct ClosedFormResult {
  PnArguments s_args;
  double pn_value = 1.0;
  /// lnGamma(m+1-l) + lnGamma(l) - lnGamma(m+1)
  double log_prefactor = 0.0;
  /// (-1)^n * pn_value * exp(log_prefactor)
  double value = 0.0;
};

/// s_1 = psi(m+1-l) - psi(m+1), s_j = zeta(j, m+1) - zeta(j, m+1-l) for
/// j = 2..n. Exactly n entries.
PnArguments build_s_arguments(const TransformParams& p);

/// Closed-form value of the transform via P_n of digamma/Hurwitz differences
/// times the Beta-function prefactor. The prefactor is formed in log space.
ClosedFormResult evaluate(const TransformParams& p);

/// The n = 1 specialization (psi(m+1) - psi(m+1-l)) * B(l, m+1-l).
double evaluate_n1(double l, double m);

}  // namespace closedform
}  // namespace mellin
