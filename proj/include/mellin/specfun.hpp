#pragma once

// Real special functions on positive arguments, in binary64.
//
// Every function rejects arguments outside its domain with mellin::DomainError
// instead of reflecting or continuing analytically. All functions are pure and
// keep no state between calls.

namespace mellin::specfun {

/// Gamma function for x > 0. Throws OverflowError once Gamma(x) exceeds
/// DBL_MAX (x > ~171.62).
double gamma(double x);

/// ln Gamma(x) for x > 0. Accurate in the relative sense, including near
/// the zeros at x = 1 and x = 2.
double log_gamma(double x);

/// Digamma psi(x) = Gamma'(x) / Gamma(x) for x > 0.
double digamma(double x);

/// Hurwitz zeta sum_{k>=0} (k + a)^-s for integer order s >= 2 and a > 0.
double hurwitz_zeta(int s, double a);

/// Riemann zeta at integer s >= 2; identical to hurwitz_zeta(s, 1).
double riemann_zeta_int(int s);

}  // namespace mellin::specfun
