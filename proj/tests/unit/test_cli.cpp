// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gri/error.hpp"
#include "gri_cli/commands.hpp"
#include "gri_cli/csv.hpp"
#include "oracles.hpp"

namespace {

using namespace gri;
using namespace gri::cli;

RunConfig config(std::string index, double z, double alpha = 0.0) {
  RunConfig c;
  c.index = std::move(index);
  c.poverty_line = z;
  c.alpha = alpha;
  return c;
}

CommandOutput estimate(const std::string& csv, const RunConfig& c) {
  std::istringstream in(csv);
  return run_estimate(c, in);
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gri::Error thrown";
  return ErrorCode::BadParams;
}

// --- csv -----------------------------------------------------------------------------

TEST(Csv, Numbers) {
  EXPECT_EQ(*parse_number(" 2.5 "), 2.5);
  EXPECT_EQ(*parse_number("+1e3"), 1000.0);
  EXPECT_FALSE(parse_number("1,5"));
  EXPECT_FALSE(parse_number("3x"));
  EXPECT_FALSE(parse_number("nan"));
  EXPECT_FALSE(parse_number("inf"));
  EXPECT_FALSE(parse_number(""));
}

TEST(Csv, HeaderDetectedAndSkipped) {
  std::istringstream in("income\n1\n\n2\n");
  const auto t = read_csv(in, 1, {0});
  ASSERT_EQ(t.header.size(), 1u);
  EXPECT_EQ(t.header[0], "income");
  EXPECT_EQ(numeric_column(t, 0), (std::vector<double>{1, 2}));
  EXPECT_EQ(t.lines, (std::vector<std::size_t>{2, 4}));
}

TEST(Csv, ParseErrorCarriesLine) {
  std::istringstream in("x\n1\nabc\n");
  const auto t = read_csv(in, 1, {0});
  try {
    (void)numeric_column(t, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(*e.detail(), 3.0);
  }
  // Also without a header: "abc" on line 3 of "1\n2\nabc".
  try {
    (void)estimate("1\n2\nabc\n", config("fgt", 1.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_EQ(*e.detail(), 3.0);
  }
}

TEST(Csv, EmptyAndWidthErrors) {
  EXPECT_EQ(code_of([] { (void)estimate("", config("fgt", 1.0)); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { (void)estimate("value\n", config("fgt", 1.0)); }), ErrorCode::EmptyInput);
  EXPECT_EQ(code_of([] { (void)estimate("1\n2,3\n", config("fgt", 1.0)); }), ErrorCode::ColumnCountMismatch);
}

TEST(Csv, GroupLabels) {
  std::istringstream in("1,urban\n2,rural\n3,urban\n");
  const auto g = group_column(read_csv(in, 2, {0}), 1);
  EXPECT_EQ(g.ids, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(g.labels, (std::vector<std::string>{"urban", "rural"}));
  std::istringstream num("1,2\n2,1\n3,3\n");
  const auto h = group_column(read_csv(num, 2, {0}), 1);
  EXPECT_EQ(h.ids, (std::vector<std::size_t>{2, 1, 3}));
}

// --- estimate ----------------------------------------------------------------------

TEST(Estimate, HeadcountExample) {
  const auto out = estimate("1\n2\n3\n4\n", config("fgt", 2.5));
  EXPECT_EQ(out.report["estimate"].get<double>(), 0.5);
  EXPECT_EQ(out.report["n"].get<std::size_t>(), 4u);
  EXPECT_EQ(out.report["variance"].get<double>(), 0.25);
  EXPECT_EQ(out.report["level"].get<double>(), 0.95);
  const auto ci = out.report["ci"];
  EXPECT_NEAR(ci[0].get<double>(), 0.5 - 1.959963984540054 * 0.25, 1e-11);
  EXPECT_NEAR(ci[1].get<double>(), 0.5 + 1.959963984540054 * 0.25, 1e-11);
  for (const char* key : {"index", "params", "n", "estimate", "variance", "ci", "level"}) {
    EXPECT_TRUE(out.report.contains(key)) << key;
  }
}

TEST(Estimate, MatchesOraclesOnRandomData) {
  std::mt19937_64 rng(17);
  const auto x = oracle::random_sample(rng, 60);
  std::string csv;
  for (double v : x) csv += fmt12(v) + "\n";
  std::vector<double> parsed;
  for (double v : x) parsed.push_back(std::strtod(fmt12(v).c_str(), nullptr));
  const double z = 2.0;
  EXPECT_NEAR(estimate(csv, config("sen", z)).report["estimate"].get<double>(), oracle::sen(parsed, z), 1e-11);
  EXPECT_NEAR(estimate(csv, config("fgt", z, 2.0)).report["estimate"].get<double>(), oracle::fgt(parsed, z, 2.0),
              1e-11);
  RunConfig k = config("kakwani", z);
  k.k = 2;
  EXPECT_NEAR(estimate(csv, k).report["estimate"].get<double>(), oracle::kakwani(parsed, z, 2), 1e-11);
}

std::map<std::string, double> text_numbers(const std::string& text) {
  std::map<std::string, double> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    const std::string key = line.substr(0, colon);
    std::string val = line.substr(colon + 2);
    if (val.front() == '[') {
      val = val.substr(1, val.size() - 2);
      std::istringstream parts(val);
      std::string p;
      for (int i = 0; std::getline(parts, p, ','); ++i) out[key + "[" + std::to_string(i) + "]"] = std::stod(p);
    } else if (const auto v = parse_number(val)) {
      out[key] = *v;
    }
  }
  return out;
}

TEST(Estimate, TextAndJsonCarryTheSameNumbers) {
  std::mt19937_64 rng(5);
  std::string csv;
  for (double v : oracle::random_sample(rng, 40)) csv += fmt12(v) + "\n";
  const auto out = estimate(csv, config("shorrocks", 1.7));
  const auto text = text_numbers(render(out, Format::Text));
  const auto j = json::parse(render(out, Format::Json));
  ASSERT_FALSE(text.empty());
  EXPECT_NEAR(text.at("estimate"), j["estimate"].get<double>(), 1e-12);
  EXPECT_NEAR(text.at("variance"), j["variance"].get<double>(), 1e-12);
  EXPECT_NEAR(text.at("ci[0]"), j["ci"][0].get<double>(), 1e-12);
  EXPECT_NEAR(text.at("ci[1]"), j["ci"][1].get<double>(), 1e-12);
  EXPECT_EQ(text.at("n"), 40.0);
}

TEST(Estimate, TwelveSignificantDigits) {
  EXPECT_EQ(num(1.0 / 3.0).dump(), "0.333333333333");
  EXPECT_EQ(num(2.0 / 3.0).dump(), "0.666666666667");
  EXPECT_EQ(num(-0.0).dump(), "0.0");
  EXPECT_TRUE(num(std::nan("")).is_null());
  EXPECT_EQ(fmt12(1e-20 / 3.0), "3.33333333333e-21");
}

TEST(Estimate, UsageErrors) {
  RunConfig c;
  c.index = "fgt";
  EXPECT_THROW((void)estimate("1\n", c), UsageError);  // no poverty line
  c.index = "gini";
  EXPECT_THROW((void)estimate("1\n", c), UsageError);
  c = config("fgt", 1.0);
  c.level = 1.5;
  EXPECT_THROW((void)estimate("1\n", c), UsageError);
}

TEST(Estimate, NobodyPoorWarnsAndReportsZero) {
  const auto out = estimate("3\n4\n5\n", config("sen", 1.0));
  EXPECT_EQ(out.report["estimate"].get<double>(), 0.0);
  EXPECT_EQ(out.report["variance"].get<double>(), 0.0);
  EXPECT_EQ(out.warnings.size(), 1u);
}

// --- compare -----------------------------------------------------------------------

CommandOutput compare(const std::string& csv, const RunConfig& c) {
  std::istringstream in(csv);
  return run_compare(c, in);
}

TEST(Compare, IdenticalColumns) {
  std::mt19937_64 rng(3);
  std::string csv = "before,after\n";
  for (double v : oracle::random_sample(rng, 50)) csv += fmt12(v) + "," + fmt12(v) + "\n";
  const auto out = compare(csv, config("fgt", 2.0, 1.0));
  EXPECT_EQ(out.report["delta"]["estimate"].get<double>(), 0.0);
  EXPECT_EQ(out.report["relative"]["estimate"].get<double>(), 0.0);
  EXPECT_NEAR(out.report["delta"]["variance"].get<double>(), 0.0, 1e-12);
}

TEST(Compare, ScaledColumnHeadcount) {
  std::mt19937_64 rng(8);
  std::string both, first, second;
  for (double v : oracle::random_sample(rng, 80)) {
    const std::string a = fmt12(v), b = fmt12(1.1 * v);
    both += a + "," + b + "\n";
    first += a + "\n";
    second += b + "\n";
  }
  const auto c = config("fgt", 2.0);
  const auto out = compare(both, c);
  const double i1 = estimate(first, c).report["estimate"].get<double>();
  const double i2 = estimate(second, c).report["estimate"].get<double>();
  EXPECT_NEAR(out.report["delta"]["estimate"].get<double>(), i2 - i1, 1e-12);
  EXPECT_NEAR(out.report["period1"]["estimate"].get<double>(), i1, 1e-12);
  // Second-file form agrees with the two-column form.
  std::istringstream in1(first), in2(second);
  EXPECT_EQ(dump(run_compare(c, in1, &in2).report), dump(out.report));
}

TEST(Compare, CovarianceMatrixInReport) {
  const auto out = compare("1,1.5\n2,1.8\n3,3.9\n0.5,0.2\n", config("fgt", 2.0, 1.0));
  const auto& m = out.report["covariance"];
  ASSERT_EQ(m.size(), 2u);
  ASSERT_EQ(m[0].size(), 2u);
  EXPECT_EQ(m[0][1].get<double>(), m[1][0].get<double>());
  EXPECT_EQ(m[0][0].get<double>(), out.report["period1"]["variance"].get<double>());
  EXPECT_EQ(m[1][1].get<double>(), out.report["period2"]["variance"].get<double>());
}

TEST(Compare, Errors) {
  EXPECT_EQ(code_of([] { (void)compare("1,2\n3\n", config("fgt", 2.0)); }), ErrorCode::ColumnCountMismatch);
  EXPECT_EQ(code_of([] { (void)compare("1,2\n3,x\n", config("fgt", 2.0)); }), ErrorCode::ParseError);
  std::istringstream a("1\n2\n3\n"), b("1\n2\n");
  EXPECT_EQ(code_of([&] { (void)run_compare(config("fgt", 2.0), a, &b); }), ErrorCode::ColumnCountMismatch);
}

// --- decompose ---------------------------------------------------------------------

CommandOutput decompose(const std::string& csv, const RunConfig& c) {
  std::istringstream in(csv);
  return run_decompose(c, in);
}

TEST(Decompose, FgtGapIsZeroWithZeroWidthInterval) {
  std::mt19937_64 rng(12);
  std::string csv;
  std::uniform_int_distribution<int> g(1, 3);
  for (double v : oracle::random_sample(rng, 90)) csv += fmt12(v) + "," + std::to_string(g(rng)) + "\n";
  const auto out = decompose(csv, config("fgt", 2.0, 1.0));
  EXPECT_NEAR(out.report["gap"].get<double>(), 0.0, 1e-12);
  const auto& ci = out.report["gd"]["ci"];
  EXPECT_NEAR(ci[1].get<double>() - ci[0].get<double>(), 0.0, 1e-12);
  EXPECT_EQ(out.report["K"].get<std::size_t>(), 3u);
}

TEST(Decompose, OneGroup) {
  const auto out = decompose("1,a\n2,a\n3,a\n4,a\n", config("sen", 2.5));
  EXPECT_EQ(out.report["gap"].get<double>(), 0.0);
  EXPECT_EQ(out.report["theta1_sq"].get<double>(), 0.0);
}

TEST(Decompose, LabelsInFirstSeenOrder) {
  const auto out = decompose("income,group\n1,urban\n2,rural\n3,urban\n4,rural\n", config("sen", 2.5));
  const auto& g = out.report["groups"];
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0]["label"], "urban");
  EXPECT_EQ(g[0]["id"].get<int>(), 1);
  EXPECT_EQ(g[1]["label"], "rural");
  EXPECT_EQ(g[1]["id"].get<int>(), 2);
  EXPECT_NEAR(out.report["gap"].get<double>(), 7.0 / 30.0 - 0.2, 1e-12);
  EXPECT_NEAR(g[0]["estimate"].get<double>(), 0.3, 1e-12);
  EXPECT_NEAR(g[1]["estimate"].get<double>(), 0.1, 1e-12);
}

TEST(Decompose, SingleObservationGroupIsAWarning) {
  const auto out = decompose("1,a\n2,a\n3,b\n4,a\n", config("shorrocks", 2.5));
  ASSERT_EQ(out.warnings.size(), 1u);
  EXPECT_NE(out.warnings[0].find("SingleObservationGroup"), std::string::npos);
  EXPECT_TRUE(out.report.contains("warnings"));
}

// --- validate ----------------------------------------------------------------------

RunConfig validate_config(const std::string& experiment, std::uint64_t seed) {
  RunConfig c;
  c.command = "validate";
  c.experiment = experiment;
  c.seed = seed;
  return c;
}

TEST(Validate, UnknownExperimentAndMissingSeed) {
  EXPECT_EQ(code_of([] { (void)run_validate(validate_config("bootstrap", 1)); }), ErrorCode::UnknownExperiment);
  RunConfig c = validate_config("coverage", 1);
  c.seed.reset();
  EXPECT_THROW((void)run_validate(c), UsageError);
}

TEST(Validate, CoverageAcceptanceRunPasses) {
  const auto out = run_validate(validate_config("coverage", 42));
  EXPECT_EQ(out.exit_code, 0);
  const double cov = out.report["coverage"].get<double>();
  EXPECT_GE(cov, 0.935);
  EXPECT_LE(cov, 0.965);
  EXPECT_EQ(out.report["replicate_values"].size(), 2000u);
}

TEST(Validate, TinySamplesFailTheBand) {
  RunConfig c = validate_config("coverage", 1);
  c.n = 3;
  c.replicates = 400;
  EXPECT_EQ(run_validate(c).exit_code, 3);
}

TEST(Validate, ByteIdenticalAcrossRunsAndThreads) {
  for (const char* e : {"normality", "coverage", "cre2", "decomposability"}) {
    RunConfig c = validate_config(e, 77);
    c.n = 200;
    c.replicates = 40;
    const auto a = dump(run_validate(c).report);
    const auto b = dump(run_validate(c).report);
    c.threads = 3;
    const auto d = dump(run_validate(c).report);
    EXPECT_EQ(a, b) << e;
    EXPECT_EQ(a, d) << e;
  }
}

// --- binary ------------------------------------------------------------------------

struct Proc {
  int status = -1;
  std::string out;
};

Proc run_cli(const std::string& args) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto out = dir / ("gri_cli_test_" + std::to_string(::getpid()) + ".out");
  const std::string cmd = std::string(GRI_CLI_PATH) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int raw = std::system(cmd.c_str());
  Proc p;
  p.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  p.out = ss.str();
  std::filesystem::remove(out);
  return p;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / (name + std::to_string(::getpid()) + ".csv");
  std::ofstream(path) << content;
  return path.string();
}

TEST(Binary, ExitCodes) {
  const auto good = write_temp("good", "1\n2\n3\n4\n");
  const auto bad = write_temp("bad", "1\n2\nabc\n");
  EXPECT_EQ(run_cli("estimate --input " + good + " --index fgt --poverty-line 2.5").status, 0);
  EXPECT_EQ(run_cli("estimate --input " + bad + " --index fgt --poverty-line 2.5").status, 1);
  EXPECT_EQ(run_cli("estimate --input /nonexistent/x.csv --poverty-line 2.5").status, 1);
  EXPECT_EQ(run_cli("estimate --input " + good).status, 2);  // fgt without a poverty line
  EXPECT_EQ(run_cli("estimate --input " + good + " --poverty-line 1 --bogus").status, 2);
  EXPECT_EQ(run_cli("frobnicate").status, 2);
  EXPECT_EQ(run_cli("validate --experiment nope --seed 1").status, 2);
  EXPECT_EQ(run_cli("validate --experiment coverage").status, 2);
  EXPECT_EQ(run_cli("validate --experiment coverage --seed 1 --n 3 --replicates 400").status, 3);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(Binary, JsonEqualsLibraryReport) {
  const auto path = write_temp("lib", "0.3\n1.7\n2.2\n0.9\n5\n1.1\n");
  const auto p = run_cli("estimate --input " + path + " --index thon --poverty-line 2 --format json");
  ASSERT_EQ(p.status, 0);
  std::ifstream f(path);
  EXPECT_EQ(p.out, dump(run_estimate(config("thon", 2.0), f).report));
  std::filesystem::remove(path);
}

TEST(Binary, ValidateTwiceIsByteIdentical) {
  const std::string args = "validate --experiment decomposability --seed 5 --n 300 --replicates 30 --format json";
  const auto a = run_cli(args);
  const auto b = run_cli(args + " --threads 2");
  EXPECT_EQ(a.status, b.status);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
}

}  // namespace
