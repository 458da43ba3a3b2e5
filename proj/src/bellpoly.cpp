#include "mellin/bellpoly.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "mellin/constants.hpp"
#include "mellin/errors.hpp"
#include "mellin/specfun.hpp"

namespace mellin::bellpoly {
namespace {

using BinomialRow = std::array<std::uint64_t, kMaxDegree + 1>;

// Pascal's triangle up to row kMaxDegree; C(30, 15) fits comfortably in 64 bits.
constexpr std::array<BinomialRow, kMaxDegree + 1> make_binomials() {
  std::array<BinomialRow, kMaxDegree + 1> rows{};
  for (std::size_t n = 0; n <= kMaxDegree; ++n) {
    rows[n][0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      rows[n][k] = rows[n - 1][k - 1] + (k < n ? rows[n - 1][k] : 0);
    }
  }
  return rows;
}

constexpr auto kBinomial = make_binomials();

void check_degree(std::size_t n, const char* fn) {
  if (n > kMaxDegree) {
    throw DomainError(std::string(fn) + ": degree " + std::to_string(n) +
                      " exceeds the supported maximum of " +
                      std::to_string(kMaxDegree));
  }
}

}  // namespace

double complete_bell(std::span<const double> x) {
  const std::size_t n = x.size();
  check_degree(n, "complete_bell");
  std::vector<double> y(n + 1, 0.0);
  y[0] = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k <= i; ++k) {
      acc += static_cast<double>(kBinomial[i][k]) * y[i - k] * x[k];
    }
    y[i + 1] = acc;
  }
  return y[n];
}

std::vector<double> bell_arguments(std::span<const double> s) {
  check_degree(s.size(), "bell_arguments");
  std::vector<double> x(s.size());
  double factorial = 1.0;  // (j-1)!
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (j > 0) factorial *= static_cast<double>(j);
    x[j] = -factorial * s[j];
  }
  return x;
}

double p_polynomial(std::span<const double> s) {
  const double y = complete_bell(bell_arguments(s));
  return (s.size() % 2 == 0) ? y : -y;
}

HarmonicVector harmonic_numbers(unsigned n_index, unsigned max_order) {
  HarmonicVector h;
  h.n_index = n_index;
  h.orders.assign(max_order, 0.0);
  for (unsigned k = 1; k <= max_order; ++k) {
    // Smallest terms first.
    double sum = 0.0;
    for (unsigned j = n_index; j >= 1; --j) {
      sum += std::pow(static_cast<double>(j), -static_cast<double>(k));
    }
    h.orders[k - 1] = sum;
  }
  return h;
}

std::pair<double, double> harmonic_zeta_consistency(unsigned n_index, int s) {
  if (n_index < 1) {
    throw DomainError("harmonic_zeta_consistency: n_index must be >= 1");
  }
  if (s < 1) {
    throw DomainError("harmonic_zeta_consistency: order must be >= 1");
  }
  const double partial =
      harmonic_numbers(n_index, static_cast<unsigned>(s)).orders.back();
  const double next = static_cast<double>(n_index) + 1.0;
  const double identity =
      (s == 1) ? specfun::digamma(next) + constants::euler_gamma
               : specfun::riemann_zeta_int(s) - specfun::hurwitz_zeta(s, next);
  return {partial, identity};
}

}  // namespace mellin::bellpoly
