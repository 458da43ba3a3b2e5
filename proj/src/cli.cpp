#include "mellin/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>

#include "mellin/closedform.hpp"
#include "mellin/errors.hpp"
#include "mellin/quadrature.hpp"
#include "mellin/report.hpp"
#include "mellin/zaveseries.hpp"

namespace mellin::cli {
namespace {

std::string text_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct Options {
  int n = 0;
  double l = 0.0;
  double m = 0.0;
  std::optional<double> tol;
  unsigned max_k = 40;
  std::optional<int> only;
  int max_n = 6;
  bool json = false;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const TransformParams p(o.n, o.l, o.m);
  const auto r = closedform::evaluate(p);
  if (o.json) {
    out << report::to_json(p, r) << "\n";
  } else {
    out << text_number(r.value) << "\n";
  }
  return kPass;
}

void print_report(const report::VerificationReport& r, std::ostream& out) {
  out << "n = " << r.params.n << ", l = " << text_number(r.params.l)
      << ", m = " << text_number(r.params.m) << "\n"
      << "closed_form = " << text_number(r.closed_form) << "\n"
      << "quadrature  = " << text_number(r.quadrature) << "\n"
      << "abs_err     = " << text_number(r.abs_err) << "\n"
      << "rel_err     = " << text_number(r.rel_err) << "\n"
      << "tolerance   = " << text_number(r.tolerance) << "\n"
      << "passed      = " << (r.passed ? "true" : "false") << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  const TransformParams p(o.n, o.l, o.m);
  const auto r = report::verify(p, o.tol.value_or(report::kDefaultVerifyTol));
  if (o.json) {
    out << report::to_json(r) << "\n";
  } else {
    print_report(r, out);
  }
  return r.passed ? kPass : kCheckFailed;
}

int cmd_examples(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.only && (*o.only < 1 || *o.only > 4)) {
    throw DomainError("--only must name an example group 1..4");
  }
  if (o.max_n < 1) throw DomainError("--max-n must be >= 1");
  report::ExamplesOptions opt;
  opt.only = o.only;
  opt.max_n = o.max_n;
  opt.tolerance = o.tol;
  const auto rows = report::run_examples(opt);

  const report::ExampleRow* first_failure = nullptr;
  for (const auto& row : rows) {
    if (!row.report.passed) {
      first_failure = &row;
      break;
    }
  }

  if (o.json) {
    std::vector<report::VerificationReport> reports;
    reports.reserve(rows.size());
    for (const auto& row : rows) reports.push_back(row.report);
    out << report::to_json(reports) << "\n";
  } else {
    char line[256];
    std::snprintf(line, sizeof line, "%-3s %-22s %-22s %-22s %-10s %s\n", "ex", "case",
                  "closed_form", "quadrature", "rel_err", "status");
    out << line;
    for (const auto& row : rows) {
      const auto& r = row.report;
      std::snprintf(line, sizeof line, "%-3d %-22s %-22.15g %-22.15g %-10.2e %s\n",
                    row.group, row.label.c_str(), r.closed_form, r.quadrature, r.rel_err,
                    r.passed ? "PASS" : "FAIL");
      out << line;
    }
    int groups = 0;
    int groups_passed = 0;
    for (int g = 1; g <= 4; ++g) {
      const bool present = std::any_of(rows.begin(), rows.end(),
                                       [g](const auto& r) { return r.group == g; });
      if (!present) continue;
      ++groups;
      groups_passed += std::all_of(rows.begin(), rows.end(), [g](const auto& r) {
        return r.group != g || r.report.passed;
      });
    }
    out << groups_passed << "/" << groups << " groups pass\n";
  }

  if (first_failure != nullptr) {
    err << "first failing row: example " << first_failure->group << ", "
        << first_failure->label << " (rel_err " << text_number(first_failure->report.rel_err)
        << ")\n";
    return kCheckFailed;
  }
  return kPass;
}

int cmd_series_check(const Options& o, std::ostream& out) {
  if (o.n < 0) throw DomainError("series-check: --n must be >= 0");
  if (o.m < 0.0 || o.m != std::floor(o.m)) {
    throw DomainError("series-check: --m must be a non-negative integer");
  }
  const auto n = static_cast<unsigned>(o.n);
  const auto m = static_cast<unsigned>(o.m);
  const double tol = o.tol.value_or(1e-9);
  const auto oracle = zaveseries::taylor_oracle(n, m, o.max_k);

  bool all_pass = true;
  std::string json = "[";
  char line[160];
  if (!o.json) {
    std::snprintf(line, sizeof line, "%-5s %-24s %-24s %-10s %s\n", "k", "expansion",
                  "taylor", "diff", "status");
    out << line;
  }
  for (unsigned k = 0; k <= o.max_k; ++k) {
    const double c = zaveseries::zave_coefficient(n, m, k);
    const double diff = std::abs(c - oracle[k]) / std::max(1.0, std::abs(oracle[k]));
    const bool pass = diff <= tol;
    all_pass = all_pass && pass;
    if (o.json) {
      json += (k == 0 ? "\n  " : ",\n  ");
      json += "{\"k\": " + std::to_string(k) + ", \"zave_coefficient\": " +
              report::json_number(c) + ", \"taylor_oracle\": " +
              report::json_number(oracle[k]) + ", \"rel_err\": " +
              report::json_number(diff) + ", \"passed\": " + (pass ? "true" : "false") +
              "}";
    } else {
      std::snprintf(line, sizeof line, "%-5u %-24.15g %-24.15g %-10.2e %s\n", k, c,
                    oracle[k], diff, pass ? "PASS" : "FAIL");
      out << line;
    }
  }
  if (o.json) {
    out << json << "\n]\n";
  } else {
    out << (all_pass ? "all coefficients agree" : "MISMATCH") << "\n";
  }
  return all_pass ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form Mellin transform of log^n(1+x)/(1+x)^(m+1)", "mellin-logpow"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "power of log(1+x)")->required();
    sub->add_option("--l", o.l, "Mellin parameter, 0 < l < m+1")->required();
    sub->add_option("--m", o.m, "denominator exponent is m+1")->required();
  };
  auto* eval = app.add_subcommand("eval", "closed-form value");
  add_params(eval);
  eval->add_flag("--json", o.json, "structured output");

  auto* verify = app.add_subcommand("verify", "closed form against quadrature");
  add_params(verify);
  verify->add_option("--tol", o.tol, "pass threshold (abs or rel), default 1e-8");
  verify->add_flag("--json", o.json, "structured output");

  auto* examples = app.add_subcommand("examples", "reproduce the worked examples");
  examples->add_option("--only", o.only, "run a single example group 1..4");
  examples->add_option("--max-n", o.max_n, "largest n for example 2 (default 6)");
  examples->add_option("--tol", o.tol, "override per-group thresholds");
  examples->add_flag("--json", o.json, "array of verification reports");

  auto* series = app.add_subcommand("series-check",
                                    "harmonic-number expansion against exact Taylor series");
  series->add_option("--n", o.n, "power of log(1+x)")->required();
  series->add_option("--m", o.m, "non-negative integer m")->required();
  series->add_option("--max-k", o.max_k, "highest coefficient (default 40)");
  series->add_option("--tol", o.tol, "threshold (default 1e-9)");
  series->add_flag("--json", o.json, "structured output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (examples->parsed()) return cmd_examples(o, out, err);
    if (series->parsed()) return cmd_series_check(o, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const quadrature::ConvergenceError& e) {
    err << "quadrature failed: " << e.what() << "\n";
    return kNoConvergence;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}

}  // namespace mellin::cli
