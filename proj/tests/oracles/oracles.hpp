#pragma once

// Test-only reference computations. None of these call into the library.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace mellin::oracle {

// Y_n by enumerating all set partitions of {1..n} (restricted growth strings):
// each partition contributes prod over blocks of x_{|block|}.
inline double bell_by_partitions(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n == 0) return 1.0;
  std::vector<std::size_t> rgs(n, 0);
  double total = 0.0;
  while (true) {
    std::vector<std::size_t> block_size(n, 0);
    for (std::size_t v : rgs) ++block_size[v];
    double term = 1.0;
    for (std::size_t b = 0; b < n; ++b) {
      if (block_size[b] > 0) term *= x[block_size[b] - 1];
    }
    total += term;
    // Next restricted growth string: rgs[i] <= 1 + max(rgs[0..i-1]).
    std::size_t i = n - 1;
    while (i > 0) {
      std::size_t max_prefix = 0;
      for (std::size_t j = 0; j < i; ++j) max_prefix = std::max(max_prefix, rgs[j]);
      if (rgs[i] <= max_prefix) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
      --i;
    }
    if (i == 0) break;
  }
  return total;
}

// The printed P_1..P_4 forms; n = s.size().
inline double p_explicit(std::span<const double> s) {
  switch (s.size()) {
    case 0:
      return 1.0;
    case 1:
      return s[0];
    case 2:
      return s[0] * s[0] - s[1];
    case 3:
      return s[0] * s[0] * s[0] - 3.0 * s[0] * s[1] + 2.0 * s[2];
    case 4: {
      const double s1 = s[0], s2 = s[1], s3 = s[2], s4 = s[3];
      return s1 * s1 * s1 * s1 - 6.0 * s1 * s1 * s2 + 8.0 * s1 * s3 + 3.0 * s2 * s2 -
             6.0 * s4;
    }
    default:
      return std::nan("");
  }
}

// zeta(s, a) by direct summation of `terms` terms in long double, plus the
// integral tail with its half-term and first derivative correction. The
// remaining error is O((a+terms)^(-s-3)).
inline long double hurwitz_partial_sum(int s, long double a, long terms = 200000) {
  long double sum = 0.0L;
  for (long k = terms - 1; k >= 0; --k) sum += std::pow(a + k, -static_cast<long double>(s));
  const long double b = a + terms;
  const long double sd = s;
  sum += std::pow(b, 1.0L - sd) / (sd - 1.0L) + 0.5L * std::pow(b, -sd) +
         sd / 12.0L * std::pow(b, -sd - 1.0L);
  return sum;
}

// Catalan's constant from its alternating series; consecutive partial sums
// are averaged twice (Euler transform of the tail).
inline long double catalan_series(long terms = 2000000) {
  long double s_prev2 = 0.0L, s_prev = 0.0L, s = 0.0L;
  for (long k = 0; k < terms; ++k) {
    const long double d = 2.0L * k + 1.0L;
    s_prev2 = s_prev;
    s_prev = s;
    s += ((k % 2 == 0) ? 1.0L : -1.0L) / (d * d);
  }
  const long double a1 = 0.5L * (s_prev2 + s_prev);
  const long double a2 = 0.5L * (s_prev + s);
  return 0.5L * (a1 + a2);
}

// psi(x) = -gamma + sum_{k>=1} (1/k - 1/(k+x-1)), truncated at `terms` with the
// tail replaced by its midpoint-integral value ln((K + x - 1/2) / (K + 1/2)).
inline long double digamma_series(long double x, long terms = 2000000) {
  long double sum = 0.0L;
  for (long k = terms; k >= 1; --k) sum += 1.0L / k - 1.0L / (k + x - 1.0L);
  const long double K = terms;
  sum += std::log((K + x - 0.5L) / (K + 0.5L));
  return sum - static_cast<long double>(std::numbers::egamma_v<long double>);
}

}  // namespace mellin::oracle
