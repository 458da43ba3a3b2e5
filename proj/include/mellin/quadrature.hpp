#pragma once

#include <stdexcept>
#include <string>

#include "mellin/closedform.hpp"

// Double-exponential quadrature for the transform integral and for the
// calibration integrals used to validate the engine. Independent of the
// closed-form evaluator: nothing here calls into specfun or bellpoly.

namespace mellin::quadrature {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  /// Number of step-halving refinements after the initial h = 1 grid, <= 12.
  int max_levels = 10;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int levels_used = 0;
  bool converged = false;
  /// Parameters sit within 1e-3 of the convergence boundary.
  bool near_boundary = false;
};

/// Thrown when max_levels refinements do not meet the tolerance. Carries the
/// last estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, QuadratureResult result)
      : std::runtime_error(what), result_(result) {}

  const QuadratureResult& result() const { return result_; }

 private:
  QuadratureResult result_;
};

/// Checks QuadratureConfig invariants; throws DomainError.
void validate(const QuadratureConfig& cfg);

/// int_0^inf x^(l-1) log^n(1+x) / (1+x)^(m+1) dx, integrated after the change
/// of variable u = log(1+x), i.e. int_0^inf (e^u - 1)^(l-1) e^(-m u) u^n du,
/// with exp-sinh nodes on the half line.
QuadratureResult integrate_transform(const TransformParams& p,
                                     const QuadratureConfig& cfg = {});

/// Same integral with x = t / (1 - t) mapping to (0, 1) and tanh-sinh nodes:
/// int_0^1 t^(l-1) (1-t)^(m-l) (-log(1-t))^n dt. A second, independent route.
QuadratureResult integrate_transform_xspace(const TransformParams& p,
                                            const QuadratureConfig& cfg = {});

/// int_0^inf x^n / (e^x - 1) dx for n >= 1.
QuadratureResult integrate_bose(int n, const QuadratureConfig& cfg = {});

/// Runs the engine on int_0^inf e^-x dx = 1, int_0^inf x^(-1/2) e^-x dx =
/// sqrt(pi) and int_0^1 x^(-1/2) dx = 2; true iff each converges within
/// cfg.max_levels and lands within 1e-11 of the exact value (relative). The
/// stopping tolerance is the tighter of cfg's and 1e-12.
bool self_check(const QuadratureConfig& cfg = {});

}  // namespace mellin::quadrature
