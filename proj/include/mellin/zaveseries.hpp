#pragma once

#include <vector>

// Power series about x = 0 of log^n(1+x) / (1+x)^(m+1) for integer m >= 0:
//
//   sum_k (-1)^n P_n(H_{m+k}^(1) - H_m^(1), ..., H_{m+k}^(n) - H_m^(n))
//         * C(m+k, m) * (-x)^k
//
// together with an exact-arithmetic Taylor expansion used as ground truth.

namespace mellin::zaveseries {

struct SeriesCoefficient {
  unsigned k = 0;
  double value = 0.0;
};

struct SeriesTruncation {
  unsigned n = 0;
  unsigned m = 0;
  unsigned max_k = 0;
  std::vector<SeriesCoefficient> coeffs;  // indices 0..max_k
};

inline constexpr unsigned kDefaultMaxK = 100;

/// Signed coefficient of x^k in the harmonic-number expansion.
double zave_coefficient(unsigned n, unsigned m, unsigned k);

/// Coefficients 0..max_k of the expansion.
SeriesTruncation truncate(unsigned n, unsigned m, unsigned max_k = kDefaultMaxK);

/// Partial sum through x^max_k. Requires |x| < 1 and max_k >= n.
double series_eval(unsigned n, unsigned m, double x, unsigned max_k = kDefaultMaxK);

/// Taylor coefficients through x^max_k obtained by exact rational
/// convolution: the n-th power of log(1+x) = sum (-1)^(j+1) x^j / j times
/// (1+x)^(-m-1) = sum (-1)^k C(m+k, m) x^k. Rounded to double once at the end.
std::vector<double> taylor_oracle(unsigned n, unsigned m, unsigned max_k);

}  // namespace mellin::zaveseries
