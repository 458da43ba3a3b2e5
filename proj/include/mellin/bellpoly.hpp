#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace mellin::bellpoly {

/// Largest polynomial degree supported. Factorial weights (j-1)! in the
/// P_n argument map leave binary64 range shortly after this.
inline constexpr std::size_t kMaxDegree = 30;

/// Complete Bell polynomial Y_n(x_1, ..., x_n), n = x.size(), with Y_0 = 1.
///
/// Evaluated by Y_{n+1} = sum_{k=0}^{n} C(n, k) Y_{n-k} x_{k+1}, with the
/// binomials formed in integer arithmetic. Throws DomainError for n > kMaxDegree.
double complete_bell(std::span<const double> x);

/// P_n(s_1, ..., s_n) = (-1)^n Y_n(-0! s_1, -1! s_2, ..., -(n-1)! s_n), P_0 = 1.
///
/// P_1 = s1, P_2 = s1^2 - s2, P_3 = s1^3 - 3 s1 s2 + 2 s3, ...
double p_polynomial(std::span<const double> s);

/// Maps P_n arguments onto Bell arguments: x_j = -(j-1)! s_j.
std::vector<double> bell_arguments(std::span<const double> s);

struct HarmonicVector {
  unsigned n_index = 0;
  /// orders[k-1] = H_{n_index}^(k) = sum_{j=1}^{n_index} j^-k.
  std::vector<double> orders;
};

/// Generalized harmonic numbers H_n^(k) for k = 1..max_order.
HarmonicVector harmonic_numbers(unsigned n_index, unsigned max_order);

/// (partial sum, special-function identity) for H_n^(s):
/// s = 1 uses psi(n+1) + gamma, s >= 2 uses zeta(s) - zeta(s, n+1).
/// A cross-check utility; the two entries agree to ~1e-11.
std::pair<double, double> harmonic_zeta_consistency(unsigned n_index, int s);

}  // namespace mellin::bellpoly
