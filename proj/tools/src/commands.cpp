// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri_cli/commands.hpp"

#include <array>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gri/decomposability.hpp"
#include "gri/error.hpp"
#include "gri/montecarlo.hpp"
#include "gri/temporal.hpp"
#include "gri_cli/csv.hpp"

namespace gri::cli {
namespace {

json index_params(const NamedIndex& idx) {
  json p = json::object();
  if (idx.uses_poverty_line()) p["poverty_line"] = num(idx.poverty_line);
  switch (idx.kind) {
    case NamedIndex::Kind::FGT:
      p["alpha"] = num(idx.alpha);
      break;
    case NamedIndex::Kind::Kakwani:
      p["k"] = idx.k;
      break;
    case NamedIndex::Kind::CentralMoment:
    case NamedIndex::Kind::OddNormalizedMoment:
    case NamedIndex::Kind::EvenNormalizedMoment:
      p["order"] = idx.order;
      break;
    default:
      break;
  }
  return p;
}

json ci_json(const Interval& ci) { return json::array({num(ci.lo), num(ci.hi)}); }

json inference(double estimate, double variance, std::size_t n, double level) {
  return json{{"estimate", num(estimate)},
              {"variance", num(variance)},
              {"ci", ci_json(confidence_interval(estimate, variance, n, level))}};
}

RepBuilder lenient(const NamedIndex& idx) {
  return [idx](const DistributionModel& F) { return named_representation(F, idx, false); };
}

void finish(CommandOutput& out) {
  if (!out.warnings.empty()) out.report["warnings"] = out.warnings;
}

void check_interior(const EmpiricalSample& s, const NamedIndex& idx, const std::string& what,
                    std::vector<std::string>& warnings) {
  if (!idx.uses_poverty_line()) return;
  const std::size_t q = s.count_at_most(idx.poverty_line);
  if (q == 0 || q == s.n()) {
    warnings.push_back(what + ": poverty line leaves " + (q == 0 ? "nobody" : "everybody") +
                       " poor; the plug-in variance is degenerate");
  }
}

std::vector<double> one_column(std::istream& in) {
  const auto t = read_csv(in, 1, {0});
  return numeric_column(t, 0);
}

}  // namespace

CommandOutput run_estimate(const RunConfig& config, std::istream& in) {
  const NamedIndex idx = make_index(config);
  const double level = resolved_level(config);
  const auto sample = EmpiricalSample::build(one_column(in));
  CommandOutput out;
  check_interior(sample, idx, "sample", out.warnings);
  const double est = named_estimate(sample, idx);
  const auto F = DistributionModel::empirical(sample);
  const double var = index_variance(F, named_representation(F, idx, false)).total;
  const auto ci = confidence_interval(est, var, sample.n(), level);
  out.report = json{{"index", idx.name()},           {"params", index_params(idx)}, {"n", sample.n()},
                    {"estimate", num(est)},           {"variance", num(var)},        {"ci", ci_json(ci)},
                    {"level", num(level)}};
  finish(out);
  return out;
}

CommandOutput run_compare(const RunConfig& config, std::istream& in, std::istream* in2) {
  const NamedIndex idx = make_index(config);
  const double level = resolved_level(config);
  std::vector<double> x, y;
  if (in2 != nullptr) {
    x = one_column(in);
    y = one_column(*in2);
    if (x.size() != y.size()) {
      throw Error(ErrorCode::ColumnCountMismatch, "periods have " + std::to_string(x.size()) + " and " +
                                                      std::to_string(y.size()) + " rows");
    }
  } else {
    const auto t = read_csv(in, 2, {0, 1});
    x = numeric_column(t, 0);
    y = numeric_column(t, 1);
  }
  const auto frame = BivariateFrame::from_pairs(x, y);
  const auto& s1 = frame.margin1.sample();
  const auto& s2 = frame.margin2.sample();
  CommandOutput out;
  check_interior(s1, idx, "period 1", out.warnings);
  check_interior(s2, idx, "period 2", out.warnings);
  const double i1 = named_estimate(s1, idx);
  const double i2 = named_estimate(s2, idx);
  const auto joint = temporal_joint_covariance(frame, lenient(idx));
  const std::size_t n = x.size();
  const auto& m = joint.matrix;

  out.report = json{{"index", idx.name()}, {"params", index_params(idx)}, {"n", n}, {"level", num(level)}};
  out.report["period1"] = inference(i1, m(0, 0), n, level);
  out.report["period2"] = inference(i2, m(1, 1), n, level);
  out.report["delta"] = inference(i2 - i1, joint.delta_var, n, level);
  if (i1 != 0.0) {
    const auto rel = relative_variation_law(joint, i1, i2);
    out.report["relative"] = inference((i2 - i1) / i1, rel.rel_var, n, level);
  } else {
    out.report["relative"] = nullptr;
    out.warnings.push_back("period 1 index is 0; relative variation undefined");
  }
  out.report["covariance"] = json::array({json::array({num(m(0, 0)), num(m(0, 1))}),
                                          json::array({num(m(1, 0)), num(m(1, 1))})});
  finish(out);
  return out;
}

CommandOutput run_decompose(const RunConfig& config, std::istream& in, std::istream* in2) {
  const NamedIndex idx = make_index(config);
  const double level = resolved_level(config);
  std::vector<double> values;
  GroupColumn groups;
  if (in2 != nullptr) {
    values = one_column(in);
    groups = group_column(read_csv(*in2, 1, {}), 0);
    if (values.size() != groups.ids.size()) {
      throw Error(ErrorCode::ColumnCountMismatch, "values and groups have " + std::to_string(values.size()) +
                                                      " and " + std::to_string(groups.ids.size()) + " rows");
    }
  } else {
    const auto t = read_csv(in, 2, {0});
    values = numeric_column(t, 0);
    groups = group_column(t, 1);
  }
  const auto sample = EmpiricalSample::build(values);
  const auto partition = SubgroupPartition::from_labels(groups.ids, groups.labels.size());
  const auto gd = gap_inference(sample, partition, idx, GapCenter::Gd, level);
  const auto gd0 = gap_inference(sample, partition, idx, GapCenter::Gd0, level);

  CommandOutput out;
  json gj = json::array();
  for (std::size_t i = 0; i < partition.K; ++i) {
    if (gd.counts[i] == 1) {
      out.warnings.push_back("SingleObservationGroup: group '" + groups.labels[i] + "' has one observation");
    }
    gj.push_back(json{{"id", i + 1},
                      {"label", groups.labels[i]},
                      {"n", gd.counts[i]},
                      {"weight", num(gd.weights[i])},
                      {"estimate", num(gd.group_estimate[i])}});
  }
  const auto& parts = gd.parts;
  out.report = json{{"index", idx.name()},
                    {"params", index_params(idx)},
                    {"n", sample.n()},
                    {"K", partition.K},
                    {"level", num(level)},
                    {"estimate", num(named_estimate(sample, idx))},
                    {"gap", num(gd.gap)},
                    {"theta1_sq", num(parts.theta1_sq)},
                    {"theta2_sq", num(parts.theta2_sq)},
                    {"theta3_sq", num(parts.theta3_sq)},
                    {"gd", json{{"variance", num(gd.variance)}, {"ci", ci_json(gd.ci)}}},
                    {"gd0", json{{"variance", num(gd0.variance)}, {"ci", ci_json(gd0.ci)}}},
                    {"groups", std::move(gj)}};
  finish(out);
  return out;
}

namespace {

struct ExperimentDefaults {
  std::string index;
  double alpha = 0.0;
  double poverty_line = 1.0;
  std::vector<std::string> families;
  std::size_t n = 0;
  std::size_t R = 0;
};

ExperimentDefaults defaults_for(const std::string& e) {
  if (e == "normality") return {"fgt", 1.0, 1.0, {"lognormal(0,1)"}, 2000, 2000};
  if (e == "coverage") return {"fgt", 0.0, 0.5, {"uniform(0,1)"}, 1000, 2000};
  if (e == "cre2") return {"", 0.0, 0.0, {"uniform(0,1)"}, 100, 200};
  if (e == "decomposability") return {"shorrocks", 0.0, 1.0, {"lognormal(0,1)", "lognormal(0.5,1)"}, 4000, 500};
  throw Error(ErrorCode::UnknownExperiment, "unknown experiment '" + e + "'");
}

json band(const std::string& rule, bool pass) { return json{{"rule", rule}, {"pass", pass}}; }

}  // namespace

CommandOutput run_validate(const RunConfig& config) {
  const auto d = defaults_for(config.experiment);
  if (!config.seed) throw UsageError("validate needs --seed");
  const std::uint64_t seed = *config.seed;
  RunConfig c = config;
  if (!c.index) c.index = d.index;
  if (!c.alpha) c.alpha = d.alpha;
  if (!c.poverty_line) c.poverty_line = d.poverty_line;
  const auto names = c.families.empty() ? d.families : c.families;
  std::vector<FamilyPtr> families;
  for (const auto& f : names) families.push_back(parse_family(f));
  const std::size_t n = c.n.value_or(d.n);
  const std::size_t R = c.replicates.value_or(d.R);
  if (n == 0 || R < 2) throw UsageError("--n must be >= 1 and --replicates >= 2");
  const double level = resolved_level(c);
  McOptions opts;
  opts.threads = c.threads;
  opts.quadrature.grid = c.grid;

  json family_names = json::array();
  for (const auto& f : families) family_names.push_back(f->describe());
  CommandOutput out;

  if (config.experiment == "cre2") {
    const std::array<std::size_t, 4> grid = {n, 4 * n, 16 * n, 64 * n};
    const auto points = cre2_diagnostic(families.front(), [](double x) { return x; }, grid, R, seed, opts);
    bool decreasing = true;
    json pj = json::array();
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i > 0 && !(points[i].mean_abs < points[i - 1].mean_abs)) decreasing = false;
      pj.push_back(json{{"n", points[i].n}, {"mean_abs", num(points[i].mean_abs)}});
    }
    out.report = json{{"experiment", "cre2"}, {"master_seed", seed}, {"R", R},
                      {"family", family_names.front()}, {"score", "x"}, {"diagnostics", std::move(pj)},
                      {"band", band("strictly decreasing in n", decreasing)}};
    out.exit_code = decreasing ? 0 : 3;
    finish(out);
    return out;
  }

  const NamedIndex idx = make_index(c);
  McReport mc;
  json rule;
  if (config.experiment == "normality") {
    mc = normality_experiment(families.front(), idx, n, R, seed, opts);
    rule = band("ks_pvalue > 0.01", mc.ks_pvalue > 0.01);
  } else if (config.experiment == "coverage") {
    mc = coverage_experiment(families.front(), idx, n, R, level, seed, opts);
    const bool pass = mc.coverage >= level - 0.015 && mc.coverage <= level + 0.015;
    rule = band("|coverage - level| <= 0.015", pass);
  } else {
    std::vector<double> p = c.weights;
    if (p.empty()) p.assign(families.size(), 1.0 / static_cast<double>(families.size()));
    if (p.size() != families.size()) throw UsageError("need one --weight per --family");
    mc = decomposability_experiment(families, p, idx, n, R, seed, level, opts);
    json w = json::array();
    for (const double v : p) w.push_back(num(v));
    rule = band("ks_pvalue > 0.01", mc.ks_pvalue > 0.01);
    out.report["weights"] = std::move(w);
  }
  json body = to_json(mc);
  json head = json{{"experiment", config.experiment}, {"index", idx.name()}, {"params", index_params(idx)}};
  head[families.size() == 1 ? "family" : "families"] =
      families.size() == 1 ? family_names.front() : family_names;
  if (out.report.contains("weights")) head["weights"] = out.report["weights"];
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() != "experiment") head[it.key()] = it.value();
  }
  head["band"] = rule;
  out.report = std::move(head);
  out.exit_code = rule["pass"].get<bool>() ? 0 : 3;
  finish(out);
  return out;
}

CommandOutput run_command(const RunConfig& config) {
  if (config.command == "validate") return run_validate(config);
  if (config.input.empty()) throw UsageError(config.command + " needs --input");
  auto open = [](const std::string& path) -> std::unique_ptr<std::istream> {
    auto f = std::make_unique<std::ifstream>(path);
    if (!*f) throw InputError("cannot open " + path);
    return f;
  };
  std::unique_ptr<std::istream> f1, f2;
  std::istream* in = &std::cin;
  if (config.input != "-") {
    f1 = open(config.input);
    in = f1.get();
  }
  std::istream* in2 = nullptr;
  if (!config.input2.empty()) {
    f2 = open(config.input2);
    in2 = f2.get();
  }
  if (config.command == "estimate") {
    if (in2 != nullptr) throw UsageError("estimate takes a single --input");
    return run_estimate(config, *in);
  }
  if (config.command == "compare") return run_compare(config, *in, in2);
  if (config.command == "decompose") return run_decompose(config, *in, in2);
  throw UsageError("unknown command '" + config.command + "'");
}

namespace {

bool scalar_array(const json& a) {
  for (const auto& v : a) {
    if (v.is_structured()) return false;
  }
  return true;
}

std::string scalar(const json& v) {
  if (v.is_number_float()) return fmt12(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit(std::ostringstream& os, const std::string& key, const json& v) {
  if (key == "replicate_values" || key == "standardized" || key == "warnings") return;
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) emit(os, key.empty() ? it.key() : key + "." + it.key(), it.value());
  } else if (v.is_array() && scalar_array(v)) {
    os << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
    os << "]\n";
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) emit(os, key + "[" + std::to_string(i) + "]", v[i]);
  } else {
    os << key << ": " << scalar(v) << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream os;
  emit(os, "", report);
  return os.str();
}

std::string render(const CommandOutput& out, Format format) {
  return format == Format::Json ? dump(out.report) : render_text(out.report);
}

}  // namespace gri::cli
