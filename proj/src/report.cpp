#include "mellin/report.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "mellin/constants.hpp"
#include "mellin/specfun.hpp"

namespace mellin::report {

VerificationReport make_report(ParamTriple params, double closed_form,
                               double quadrature, double tolerance) {
  VerificationReport r;
  r.params = params;
  r.closed_form = closed_form;
  r.quadrature = quadrature;
  r.abs_err = std::abs(closed_form - quadrature);
  r.rel_err = r.abs_err / std::abs(closed_form);
  r.tolerance = tolerance;
  r.passed = r.abs_err <= tolerance || r.rel_err <= tolerance;
  return r;
}

VerificationReport verify(const TransformParams& p, double tolerance,
                          const quadrature::QuadratureConfig& cfg) {
  const double closed = closedform::evaluate(p).value;
  const double quad = quadrature::integrate_transform(p, cfg).value;
  return make_report({p.n(), p.l(), p.m()}, closed, quad, tolerance);
}

double example3_target() {
  constexpr double pi = std::numbers::pi;
  const double ln2 = std::numbers::ln2;
  return pi * pi * pi / 3.0 + 4.0 * pi * ln2 * ln2;
}

double example4_target() {
  constexpr double pi = std::numbers::pi;
  const double shifted = constants::euler_gamma + specfun::digamma(0.25);
  return std::numbers::sqrt2 * pi *
         (8.0 * constants::catalan + 5.0 * pi * pi / 6.0 + shifted * shifted);
}

std::vector<ExampleRow> run_examples(const ExamplesOptions& opt) {
  auto wanted = [&](int g) { return !opt.only || *opt.only == g; };
  auto tol_or = [&](double d) { return opt.tolerance.value_or(d); };
  std::vector<ExampleRow> rows;
  char label[96];

  if (wanted(1)) {
    for (double m : {0.0, 0.5, 1.0, 2.5}) {
      for (double frac : {0.25, 0.5, 0.75}) {
        const TransformParams p(1, frac * (m + 1.0), m);
        const double closed = closedform::evaluate_n1(p.l(), p.m());
        const double quad = quadrature::integrate_transform(p).value;
        std::snprintf(label, sizeof label, "n=1 l=%g m=%g", p.l(), p.m());
        rows.push_back({1, label,
                        make_report({1, p.l(), p.m()}, closed, quad,
                                    tol_or(kDefaultVerifyTol))});
      }
    }
  }

  if (wanted(2)) {
    double factorial = 1.0;
    for (int n = 1; n <= opt.max_n; ++n) {
      factorial *= n;
      const double closed = factorial * specfun::riemann_zeta_int(n + 1);
      const double quad = quadrature::integrate_bose(n).value;
      std::snprintf(label, sizeof label, "n=%d  n! zeta(n+1)", n);
      rows.push_back({2, label, make_report({n, 0.0, 0.0}, closed, quad, tol_or(kBoseTol))});
    }
  }

  auto general_and_printed = [&](int group, const TransformParams& p, double printed) {
    const double quad = quadrature::integrate_transform(p).value;
    const double general = closedform::evaluate(p).value;
    const ParamTriple t{p.n(), p.l(), p.m()};
    rows.push_back({group, "general closed form", make_report(t, general, quad,
                                                              tol_or(kDefaultVerifyTol))});
    rows.push_back({group, "printed closed form", make_report(t, printed, quad,
                                                              tol_or(kDefaultVerifyTol))});
  };
  if (wanted(3)) general_and_printed(3, TransformParams(2, 0.5, 0.0), example3_target());
  if (wanted(4)) general_and_printed(4, TransformParams(2, 0.75, 0.0), example4_target());
  return rows;
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const VerificationReport& r) {
  std::ostringstream os;
  os << "{\"params\": {\"n\": " << r.params.n << ", \"l\": " << json_number(r.params.l)
     << ", \"m\": " << json_number(r.params.m) << "}"
     << ", \"closed_form\": " << json_number(r.closed_form)
     << ", \"quadrature\": " << json_number(r.quadrature)
     << ", \"abs_err\": " << json_number(r.abs_err)
     << ", \"rel_err\": " << json_number(r.rel_err)
     << ", \"tolerance\": " << json_number(r.tolerance)
     << ", \"passed\": " << (r.passed ? "true" : "false") << "}";
  return os.str();
}

std::string to_json(const std::vector<VerificationReport>& rs) {
  std::string out = "[";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    out += (i == 0 ? "\n  " : ",\n  ");
    out += to_json(rs[i]);
  }
  out += rs.empty() ? "]" : "\n]";
  return out;
}

std::string to_json(const TransformParams& p, const closedform::ClosedFormResult& r) {
  std::ostringstream os;
  os << "{\"n\": " << p.n() << ", \"l\": " << json_number(p.l())
     << ", \"m\": " << json_number(p.m()) << ", \"s_args\": [";
  for (std::size_t i = 0; i < r.s_args.size(); ++i) {
    os << (i ? ", " : "") << json_number(r.s_args[i]);
  }
  os << "], \"pn_value\": " << json_number(r.pn_value)
     << ", \"log_prefactor\": " << json_number(r.log_prefactor)
     << ", \"value\": " << json_number(r.value) << "}";
  return os.str();
}

}  // namespace mellin::report
