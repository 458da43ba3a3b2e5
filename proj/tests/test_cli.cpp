#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mellin/cli.hpp"
#include "mellin/closedform.hpp"

using nlohmann::json;
namespace cli = mellin::cli;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double ln2 = std::numbers::ln2;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::set<std::string> kReportKeys = {"params",  "closed_form", "quadrature", "abs_err",
                                           "rel_err", "tolerance",   "passed"};

void expect_report_shape(const json& r) {
  std::set<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.insert(k);
  EXPECT_EQ(keys, kReportKeys);
  ASSERT_TRUE(r["params"].is_object());
  EXPECT_TRUE(r["params"].contains("n"));
  EXPECT_TRUE(r["params"].contains("l"));
  EXPECT_TRUE(r["params"].contains("m"));
  const double tol = r["tolerance"].get<double>();
  const bool within = r["abs_err"].get<double>() <= tol ||
                      (r["rel_err"].is_number() && r["rel_err"].get<double>() <= tol);
  EXPECT_EQ(r["passed"].get<bool>(), within);
}

}  // namespace

TEST(Cli, EvalText) {
  const auto r = run({"eval", "--n", "2", "--l", "0.5", "--m", "0"});
  EXPECT_EQ(r.code, cli::kPass);
  const double expected = std::pow(pi, 3) / 3.0 + 4.0 * pi * ln2 * ln2;
  EXPECT_NEAR(std::stod(r.out), expected, 1e-13 * expected);
  EXPECT_EQ(r.out.back(), '\n');
}

TEST(Cli, EvalKnownValues) {
  const auto log_case = run({"eval", "--n", "1", "--l", "0.5", "--m", "0"});
  EXPECT_EQ(log_case.code, cli::kPass);
  EXPECT_NEAR(std::stod(log_case.out), 2.0 * pi * ln2, 1e-14);
  const auto beta = run({"eval", "--n", "0", "--l", "0.5", "--m", "0.5"});
  EXPECT_EQ(beta.code, cli::kPass);
  EXPECT_NEAR(std::stod(beta.out), 2.0, 1e-14);
}

TEST(Cli, EvalJsonRoundTripsExactly) {
  const auto r = run({"eval", "--n", "3", "--l", "0.7", "--m", "1.25", "--json"});
  ASSERT_EQ(r.code, cli::kPass);
  const auto j = json::parse(r.out);
  const auto direct = mellin::closedform::evaluate(mellin::TransformParams(3, 0.7, 1.25));
  EXPECT_EQ(j["n"].get<int>(), 3);
  EXPECT_EQ(j["l"].get<double>(), 0.7);
  EXPECT_EQ(j["m"].get<double>(), 1.25);
  EXPECT_EQ(j["value"].get<double>(), direct.value);
  EXPECT_EQ(j["pn_value"].get<double>(), direct.pn_value);
  EXPECT_EQ(j["log_prefactor"].get<double>(), direct.log_prefactor);
  ASSERT_EQ(j["s_args"].size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(j["s_args"][i].get<double>(), direct.s_args[i]);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--n", "1.5", "--l", "0.5", "--m", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--l", "0.5", "--m", "0"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--n", "1", "--l", "0.5", "--m", "0", "--bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"eval", "--n", "1", "--l", "abc", "--m", "0"}).code, cli::kUsage);
  const auto r = run({"verify"});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_NE(r.out.find("series-check"), std::string::npos);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run({"eval", "--n", "1", "--l", "2", "--m", "0.5"}).code, cli::kDomain);
  EXPECT_EQ(run({"eval", "--n", "1", "--l", "0", "--m", "0.5"}).code, cli::kDomain);
  EXPECT_EQ(run({"eval", "--n", "-1", "--l", "0.5", "--m", "0.5"}).code, cli::kDomain);
  EXPECT_EQ(run({"verify", "--n", "1", "--l", "-0.5", "--m", "0"}).code, cli::kDomain);
  EXPECT_EQ(run({"examples", "--only", "5"}).code, cli::kDomain);
  EXPECT_EQ(run({"series-check", "--n", "2", "--m", "1.5"}).code, cli::kDomain);
  const auto r = run({"eval", "--n", "1", "--l", "3", "--m", "1"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, NonConvergenceExitCode) {
  // The integrand behaves like 1/x over ~300 decades; the integral is ~1e300.
  const auto r = run({"verify", "--n", "0", "--l", "1e-300", "--m", "0"});
  EXPECT_EQ(r.code, cli::kNoConvergence);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, VerifyCases) {
  const std::vector<std::vector<std::string>> cases = {
      {"--n", "2", "--l", "0.5", "--m", "0"},
      {"--n", "0", "--l", "0.3", "--m", "1.7"},
      {"--n", "4", "--l", "0.9", "--m", "2.5"},
  };
  for (const auto& c : cases) {
    std::vector<std::string> args = {"verify"};
    args.insert(args.end(), c.begin(), c.end());
    args.push_back("--json");
    const auto r = run(args);
    EXPECT_EQ(r.code, cli::kPass) << r.out << r.err;
    const auto j = json::parse(r.out);
    expect_report_shape(j);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_LE(j["rel_err"].get<double>(), 1e-8);
  }
}

TEST(Cli, VerifyTextAndTightTolerance) {
  const auto ok = run({"verify", "--n", "1", "--l", "0.5", "--m", "1"});
  EXPECT_EQ(ok.code, cli::kPass);
  EXPECT_NE(ok.out.find("passed      = true"), std::string::npos);

  const auto tight = run({"verify", "--n", "4", "--l", "0.9", "--m", "2.5", "--tol", "1e-300",
                          "--json"});
  EXPECT_EQ(tight.code, cli::kCheckFailed);
  const auto j = json::parse(tight.out);
  expect_report_shape(j);
  EXPECT_FALSE(j["passed"].get<bool>());
}

TEST(Cli, ExamplesDefault) {
  const auto r = run({"examples"});
  EXPECT_EQ(r.code, cli::kPass) << r.err;
  EXPECT_NE(r.out.find("4/4 groups pass"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ExamplesJsonAndFilters) {
  const auto all = run({"examples", "--json"});
  ASSERT_EQ(all.code, cli::kPass);
  const auto arr = json::parse(all.out);
  ASSERT_TRUE(arr.is_array());
  EXPECT_EQ(arr.size(), 12u + 6u + 2u + 2u);
  for (const auto& r : arr) expect_report_shape(r);

  const auto bose = run({"examples", "--only", "2", "--max-n", "3", "--json"});
  ASSERT_EQ(bose.code, cli::kPass);
  const auto b = json::parse(bose.out);
  ASSERT_EQ(b.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(b[i]["params"]["n"].get<int>(), i + 1);

  const auto failing = run({"examples", "--only", "3", "--tol", "1e-300"});
  EXPECT_EQ(failing.code, cli::kCheckFailed);
  EXPECT_NE(failing.err.find("first failing row"), std::string::npos);
  EXPECT_NE(failing.out.find("0/1 groups pass"), std::string::npos);
}

TEST(Cli, SeriesCheck) {
  const auto r = run({"series-check", "--n", "3", "--m", "2", "--max-k", "25"});
  EXPECT_EQ(r.code, cli::kPass);
  EXPECT_NE(r.out.find("all coefficients agree"), std::string::npos);

  const auto j = json::parse(run({"series-check", "--n", "2", "--m", "0", "--json"}).out);
  ASSERT_EQ(j.size(), 41u);
  for (std::size_t k = 0; k < j.size(); ++k) {
    EXPECT_EQ(j[k]["k"].get<unsigned>(), k);
    EXPECT_TRUE(j[k]["passed"].get<bool>());
  }
  // log^2(1+x)/(1+x) = x^2 - 2x^3 + ...
  EXPECT_NEAR(j[2]["zave_coefficient"].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(j[3]["zave_coefficient"].get<double>(), -2.0, 1e-15);
}
