#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mellin/closedform.hpp"
#include "mellin/quadrature.hpp"

namespace mellin::report {

// Plain (n, l, m) triple. Unlike TransformParams it is not validated, so it
// can also describe the l -> 0, m -> 0 limit rows of the Bose integral.
struct ParamTriple {
  int n = 0;
  double l = 0.0;
  double m = 0.0;
};

struct VerificationReport {
  ParamTriple params;
  double closed_form = 0.0;
  double quadrature = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool passed = false;  // abs_err <= tolerance || rel_err <= tolerance
};

VerificationReport make_report(ParamTriple params, double closed_form,
                               double quadrature, double tolerance);

/// Closed form against the quadrature oracle. Propagates DomainError and
/// quadrature::ConvergenceError.
VerificationReport verify(const TransformParams& p, double tolerance,
                          const quadrature::QuadratureConfig& cfg = {});

struct ExampleRow {
  int group = 0;  // 1..4
  std::string label;
  VerificationReport report;
};

struct ExamplesOptions {
  std::optional<int> only;  // restrict to one group
  int max_n = 6;            // largest n for the Bose-integral group
  std::optional<double> tolerance;  // overrides the per-group defaults
};

inline constexpr double kDefaultVerifyTol = 1e-8;
inline constexpr double kBoseTol = 1e-9;

/// Right-hand side of the l = 3/4, m = 0, n = 2 instance assembled from
/// library primitives: sqrt(2) pi (8 C + 5 pi^2 / 6 + (gamma + psi(1/4))^2).
double example4_target();

/// pi^3 / 3 + 4 pi log^2 2, the l = 1/2, m = 0, n = 2 instance.
double example3_target();

/// Rows in deterministic order: group 1 grid, group 2 for n = 1..max_n,
/// then groups 3 and 4.
std::vector<ExampleRow> run_examples(const ExamplesOptions& opt);

/// 17 significant digits; non-finite values become null.
std::string json_number(double v);

/// Flat object with keys params {n, l, m}, closed_form, quadrature, abs_err,
/// rel_err, tolerance, passed.
std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<VerificationReport>& rs);
std::string to_json(const TransformParams& p, const closedform::ClosedFormResult& r);

}  // namespace mellin::report
