#include "mellin/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mellin/constants.hpp"
#include "mellin/errors.hpp"

namespace mellin::specfun {
namespace {

// B_2, B_4, ..., B_16.
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,   -1.0 / 30.0,    1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0,  -3617.0 / 510.0,
};

// zeta(k) - 1 for k = 2..56, indexed by k - 2.
constexpr std::array<double, 55> kZetaMinusOne = {
    0.6449340668482264364724,    0.2020569031595942853997,
    0.082323233711138191516,     0.03692775514336992633137,
    0.01734306198444913971452,   0.008349277381922826839798,
    0.004077356197944339378685,  0.002008392826082214417853,
    0.000994575127818085337146,  0.0004941886041194645587023,
    0.000246086553308048298638,  0.0001227133475784891467518,
    6.124813505870482925855e-5,  3.058823630702049355173e-5,
    1.528225940865187173257e-5,  7.6371976378997622736e-6,
    3.817293264999839856462e-6,  1.908212716553938925657e-6,
    9.53962033872796113152e-7,   4.769329867878064631167e-7,
    2.384505027277329900036e-7,  1.192199259653110730678e-7,
    5.960818905125947961244e-8,  2.980350351465228018606e-8,
    1.490155482836504123466e-8,  7.450711789835429491981e-9,
    3.725334024788457054819e-9,  1.862659723513049006404e-9,
    9.313274324196681828718e-10, 4.656629065033784072989e-10,
    2.328311833676505492002e-10, 1.164155017270051977593e-10,
    5.820772087902700889251e-11, 2.910385044497099686928e-11,
    1.455192189104198423598e-11, 7.275959835057481014509e-12,
    3.637979547378651190237e-12, 1.818989650307065947653e-12,
    9.094947840263889282877e-13, 4.547473783042154027044e-13,
    2.273736845824652515067e-13, 1.136868407680227849247e-13,
    5.684341987627585614097e-14, 2.842170976889301846261e-14,
    1.421085482803160674388e-14, 7.105427395210852705164e-15,
    3.552713691337113736653e-15, 1.776356843579120414368e-15,
    8.881784210930816192819e-16, 4.440892103143814118171e-16,
    2.220446050798042399673e-16, 1.110223025141065655981e-16,
    5.551115124845479753977e-17, 2.775557562136117127838e-17,
    1.387778780972527508297e-17,
};

// Lanczos approximation N=13, g=6.02468 (the lanczos13m53 set tuned for
// binary64): Gamma(z) = S(z) * (z+g-1/2)^(z-1/2) / exp(z+g-1/2), with S a
// rational function of z.
constexpr double kLanczosG = 6.024680040776729583740234375;
constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};
constexpr std::array<double, 13> kLanczosDenom = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0,
    45995730.0, 13339535.0, 2637558.0,   357423.0,    32670.0,
    1925.0,     66.0,       1.0,
};

constexpr double kLogMax = 709.782712893383996843;  // ln(DBL_MAX)
constexpr double kHalfLog2Pi = 0.918938533204672741780329736406;

void require_positive(double x, const char* fn) {
  if (!(x > 0.0) || std::isnan(x)) {
    throw DomainError(std::string(fn) + ": argument must be > 0, got " +
                      std::to_string(x));
  }
}

double lanczos_sum(double z) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = kLanczosNum.size(); i-- > 0;) {
    num = num * z + kLanczosNum[i];
    den = den * z + kLanczosDenom[i];
  }
  return num / den;
}

// Gamma(x) for 0 < x <= 171.6 without overflow in the intermediate power.
double gamma_lanczos(double x) {
  if (x == std::floor(x) && x <= 23.0) {
    double f = 1.0;
    for (double k = 2.0; k < x; k += 1.0) f *= k;
    return f;
  }
  // g - 1/2 is exact; keep the rounding error of the sum, since exp and pow
  // would otherwise magnify it by |zgh| ~ 10.
  constexpr double gh = kLanczosG - 0.5;
  const double zgh = x + gh;
  const double bx = zgh - gh;
  const double err = (x - bx) + (gh - (zgh - bx));
  const double correction = 1.0 + err * ((x - 0.5) / zgh - 1.0);
  const double half_power = std::pow(zgh, 0.5 * x - 0.25);
  return lanczos_sum(x) * (half_power / std::exp(zgh)) * half_power * correction;
}

// ln Gamma(1 + z) for |z| <= 1/2 from the Taylor series
// -gamma z + sum_{k>=2} (-1)^k zeta(k) z^k / k.
double log_gamma_1p(double z) {
  double acc = 0.0;
  for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
    const double k = static_cast<double>(i + 2);
    const double coeff = ((i % 2 == 0) ? 1.0 : -1.0) * (1.0 + kZetaMinusOne[i]) / k;
    acc = (acc + coeff) * z;
  }
  return (acc - constants::euler_gamma) * z;
}

// ln Gamma(2 + z) for -1/2 <= z <= 1 from
// (1 - gamma) z + sum_{k>=2} (-1)^k (zeta(k) - 1) z^k / k.
double log_gamma_2p(double z) {
  double acc = 0.0;
  for (std::size_t i = kZetaMinusOne.size(); i-- > 0;) {
    const double k = static_cast<double>(i + 2);
    const double coeff = ((i % 2 == 0) ? 1.0 : -1.0) * kZetaMinusOne[i] / k;
    acc = (acc + coeff) * z;
  }
  return (acc + (1.0 - constants::euler_gamma)) * z;
}

double log_gamma_stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double power = inv;
  for (std::size_t k = 0; k < kBernoulli.size(); ++k) {
    const double two_k = 2.0 * static_cast<double>(k + 1);
    series += kBernoulli[k] / (two_k * (two_k - 1.0)) * power;
    power *= inv2;
  }
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) {
    // ln Gamma(x) = ln Gamma(1 + x) - ln x; for tiny x the log term dominates.
    return log_gamma_1p(x) - std::log(x);
  }
  if (x < 1.5) return log_gamma_1p(x - 1.0);
  if (x < 3.0) return log_gamma_2p(x - 2.0);
  if (x < 8.0) {
    // Shift down to [2, 3); x - k is exact here.
    double z = x;
    double prod = 1.0;
    while (z >= 3.0) {
      z -= 1.0;
      prod *= z;
    }
    return std::log(prod) + log_gamma_2p(z - 2.0);
  }
  if (x <= 171.0) return std::log(gamma_lanczos(x));
  return log_gamma_stirling(x);
}

double gamma(double x) {
  require_positive(x, "gamma");
  // Gamma is exp(ln Gamma) so that the two functions stay mutually
  // consistent; small integers keep their exact factorials.
  if (x == std::floor(x) && x <= 23.0) return gamma_lanczos(x);
  const double lg = log_gamma(x);
  if (lg > kLogMax) {
    throw OverflowError("gamma: result overflows for x = " + std::to_string(x));
  }
  const double g = std::exp(lg);
  if (std::isinf(g)) {
    throw OverflowError("gamma: result overflows for x = " + std::to_string(x));
  }
  return g;
}

double digamma(double x) {
  require_positive(x, "digamma");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  // psi(x) ~ ln x - 1/(2x) - sum B_2k / (2k x^2k)
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  for (std::size_t k = kBernoulli.size(); k-- > 0;) {
    const double two_k = 2.0 * static_cast<double>(k + 1);
    series = (series + kBernoulli[k] / two_k) * inv2;
  }
  return std::log(x) - 0.5 / x - series - shift;
}

double hurwitz_zeta(int s, double a) {
  if (s < 2) {
    throw DomainError("hurwitz_zeta: order must be >= 2, got " + std::to_string(s));
  }
  require_positive(a, "hurwitz_zeta");
  const double sd = static_cast<double>(s);
  const int head = s > 16 ? s : 16;
  const double b = a + static_cast<double>(head);

  // Euler-Maclaurin tail at b: b^(1-s)/(s-1) + b^-s/2
  //   + sum_j B_2j/(2j)! * s(s+1)...(s+2j-2) * b^(-s-2j+1)
  const double b_pow = std::pow(b, -sd);
  double correction = 0.0;
  double rising = sd * b_pow / b;  // s * b^(-s-1)
  double fact = 2.0;               // (2j)!
  for (std::size_t j = 0; j < kBernoulli.size(); ++j) {
    const double term = kBernoulli[j] / fact * rising;
    correction += term;
    const double two_j = 2.0 * static_cast<double>(j + 1);
    rising *= (sd + two_j - 1.0) * (sd + two_j) / (b * b);
    fact *= (two_j + 1.0) * (two_j + 2.0);
  }
  double sum = b_pow * b / (sd - 1.0) + 0.5 * b_pow + correction;
  for (int k = head - 1; k >= 0; --k) {
    sum += std::pow(a + static_cast<double>(k), -sd);
  }
  return sum;
}

double riemann_zeta_int(int s) { return hurwitz_zeta(s, 1.0); }

}  // namespace mellin::specfun
