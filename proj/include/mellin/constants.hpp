#pragma once

#include <numbers>

namespace mellin {

struct Constants {
  double euler_gamma;
  double catalan;
  double pi;
};

namespace constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double euler_gamma = std::numbers::egamma;

// Catalan's constant, sum_{n>=0} (-1)^n / (2n+1)^2, to 30 significant digits
// (OEIS A006752). The only hard-coded transcendental in the project.
inline constexpr double catalan = 0.915965594177219015054603514932;

inline constexpr Constants all{euler_gamma, catalan, pi};

}  // namespace constants
}  // namespace mellin
