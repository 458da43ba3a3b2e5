#include "mellin/zaveseries.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>

#include "mellin/bellpoly.hpp"
#include "mellin/errors.hpp"

namespace mellin::zaveseries {
namespace {

using Rational = boost::multiprecision::cpp_rational;

// C(m+k, m) built as C(k+1,1), C(k+2,2), ...; each step is an integer.
double binomial(unsigned m, unsigned k) {
  double r = 1.0;
  for (unsigned i = 1; i <= m; ++i) {
    r = r * static_cast<double>(k + i) / static_cast<double>(i);
  }
  return r;
}

std::vector<Rational> convolve(const std::vector<Rational>& a,
                               const std::vector<Rational>& b, std::size_t len) {
  std::vector<Rational> out(len, Rational(0));
  for (std::size_t i = 0; i < len && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < len && j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

double zave_coefficient(unsigned n, unsigned m, unsigned k) {
  if (n > bellpoly::kMaxDegree) {
    throw DomainError("zave_coefficient: n exceeds the supported maximum");
  }
  // H_{m+k}^(j) - H_m^(j) summed directly over (m, m+k], smallest term first.
  std::vector<double> diffs(n, 0.0);
  for (unsigned j = 1; j <= n; ++j) {
    double sum = 0.0;
    for (unsigned i = m + k; i > m; --i) {
      sum += std::pow(static_cast<double>(i), -static_cast<double>(j));
    }
    diffs[j - 1] = sum;
  }
  const double pn = bellpoly::p_polynomial(diffs);
  const bool negative = ((n + k) % 2) == 1;
  const double c = pn * binomial(m, k);
  if (c == 0.0) return 0.0;
  return negative ? -c : c;
}

SeriesTruncation truncate(unsigned n, unsigned m, unsigned max_k) {
  SeriesTruncation t{n, m, max_k, {}};
  t.coeffs.reserve(max_k + 1);
  for (unsigned k = 0; k <= max_k; ++k) t.coeffs.push_back({k, zave_coefficient(n, m, k)});
  return t;
}

double series_eval(unsigned n, unsigned m, double x, unsigned max_k) {
  if (!(std::abs(x) < 1.0)) {
    throw DomainError("series_eval: |x| must be < 1, got " + std::to_string(x));
  }
  if (max_k < n) {
    throw DomainError("series_eval: max_k must be >= n");
  }
  double sum = 0.0;
  double power = 1.0;
  for (unsigned k = 0; k <= max_k; ++k) {
    sum += zave_coefficient(n, m, k) * power;
    power *= x;
  }
  return sum;
}

std::vector<double> taylor_oracle(unsigned n, unsigned m, unsigned max_k) {
  const std::size_t len = static_cast<std::size_t>(max_k) + 1;

  std::vector<Rational> log_series(len, Rational(0));
  for (std::size_t j = 1; j < len; ++j) {
    log_series[j] = Rational(j % 2 == 1 ? 1 : -1, static_cast<long long>(j));
  }

  std::vector<Rational> binom_series(len, Rational(0));
  {
    Rational c(1);  // C(m+k, m)
    for (std::size_t k = 0; k < len; ++k) {
      if (k > 0) c = c * Rational(m + k) / Rational(k);
      binom_series[k] = (k % 2 == 0) ? c : Rational(-c);
    }
  }

  std::vector<Rational> acc = binom_series;
  for (unsigned i = 0; i < n; ++i) acc = convolve(acc, log_series, len);

  std::vector<double> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = acc[k].convert_to<double>();
  return out;
}

}  // namespace mellin::zaveseries
