// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Tolerances, seeds and time limits are fixed here and nowhere else.
#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gri/decomposability.hpp"
#include "gri/error.hpp"
#include "gri/families.hpp"
#include "gri/indices.hpp"
#include "gri/normal.hpp"
#include "gri/montecarlo.hpp"
#include "gri/representation.hpp"
#include "gri/temporal.hpp"
#include "gri_cli/commands.hpp"
#include "oracles.hpp"

namespace {

using namespace gri;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_s) {
    out.pass = false;
    out.detail += fmt("; over time limit %.0f s", limit_s);
  }
  if (!out.pass) ++failures;
  std::printf("%s  %2d  %-34s %s [%.2f s]\n", out.pass ? "PASS" : "FAIL", id, name, out.detail.c_str(), secs);
  std::fflush(stdout);
}

EmpiricalSample make(std::vector<double> v) { return EmpiricalSample::build(v); }

cli::RunConfig validate_config(const std::string& experiment, std::uint64_t seed, unsigned threads = 1) {
  cli::RunConfig c;
  c.command = "validate";
  c.experiment = experiment;
  c.seed = seed;
  c.threads = threads;
  return c;
}

// ---- 1 ------------------------------------------------------------------------------

Outcome exact_formulas() {
  constexpr double tol = 1e-12;
  double worst = 0.0;
  auto check = [&](double got, double want) { worst = std::max(worst, std::abs(got - want)); };
  const auto s4 = make({1, 2, 3, 4});
  const auto s2 = make({1, 3});
  check(named_estimate(s4, NamedIndex::fgt(2.5, 1.0)), 0.2);
  check(named_estimate(s2, NamedIndex::sen(2.0)), 0.25);
  check(named_estimate(s2, NamedIndex::shorrocks(2.0)), 0.375);
  check(named_estimate(s2, NamedIndex::thon(2.0)), 1.0 / 3.0);
  check(named_estimate(s2, NamedIndex::kakwani(2.0, 1)), 0.25);
  check(named_estimate(s2, NamedIndex::takayama(2.0)), 0.5);
  // Same formulas against the independent textbook displays on random samples.
  std::mt19937_64 g(1);
  for (int t = 0; t < 50; ++t) {
    const auto v = oracle::random_sample(g, 3 + t * 3);
    const auto s = make(v);
    const double z = 0.5 + 0.06 * t;
    check(named_estimate(s, NamedIndex::fgt(z, 1.5)), oracle::fgt(v, z, 1.5));
    check(named_estimate(s, NamedIndex::sen(z)), oracle::sen(v, z));
    check(named_estimate(s, NamedIndex::shorrocks(z)), oracle::shorrocks(v, z));
    check(named_estimate(s, NamedIndex::thon(z)), oracle::thon(v, z));
    check(named_estimate(s, NamedIndex::kakwani(z, 2)), oracle::kakwani(v, z, 2));
    check(named_estimate(s, NamedIndex::takayama(z)), oracle::takayama(v, z, [](double x) { return x; }));
  }
  return {worst <= tol, fmt("max |error| %.2e (tol 1e-12)", worst)};
}

// ---- 2, 3, 6c, 8 through the CLI driver -----------------------------------------------

std::string report_bytes(const cli::RunConfig& c) { return cli::dump(cli::run_validate(c).report); }

Outcome coverage_band() {
  const auto out = cli::run_validate(validate_config("coverage", 42));
  const double cov = out.report["coverage"].get<double>();
  return {cov >= 0.935 && cov <= 0.965, fmt("coverage %.4f in [0.935, 0.965]", cov)};
}

Outcome normality() {
  auto c = validate_config("normality", 7);
  const auto out = cli::run_validate(c);
  const double d = out.report["ks_stat"].get<double>();
  const double p = out.report["ks_pvalue"].get<double>();
  return {d < 0.04 && p > 0.01, fmt("KS D %.4f < 0.04, p %.4f > 0.01", d, p)};
}

// ---- 4 ------------------------------------------------------------------------------

Outcome analytic_integrals() {
  const ScoreFunction one = [](double) { return 1.0; };
  const ScoreFunction id = [](double x) { return x; };
  const std::vector<FamilyPtr> fams{ParametricFamily::uniform(0, 1), ParametricFamily::uniform(-3, 7),
                                    ParametricFamily::exponential(2.0), ParametricFamily::lognormal(0, 1),
                                    ParametricFamily::pareto(1.0, 3.0), ParametricFamily::normal(0, 1)};
  double worst_bb = 0.0;
  for (const auto& f : fams) worst_bb = std::max(worst_bb, std::abs(beta_beta_cov(to_model(f), one, one) - 1.0 / 12));
  const double bc = beta_cross_cov(to_model(ParametricFamily::uniform(0, 1)), id, one);
  const double ic = indicator_cov_closed_form(0.5, 0.5);
  const bool pass = worst_bb <= 1e-9 && std::abs(bc + 1.0 / 12) <= 1e-9 && ic == 0.25;
  return {pass, fmt("beta_beta err %.1e, beta_cross err %.1e, indicator %.17g", worst_bb, std::abs(bc + 1.0 / 12), ic)};
}

// ---- 5 ------------------------------------------------------------------------------

Outcome moments() {
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> u(-5, 5);
  double worst_a2 = 0.0;
  for (int i = 0; i < 20; ++i) {
    const std::vector<double> m{1.0, u(g), 1.0 + std::abs(u(g)), u(g)};
    const double x = u(g);
    worst_a2 = std::max(worst_a2, std::abs(moment_score(2, x, m) - (x - m[1]) * (x - m[1])));
  }
  // Plug-in variance of the sample variance on one standard-normal sample.
  const auto normal = ParametricFamily::normal(0, 1);
  const auto Fn = DistributionModel::empirical(draw(*normal, 100000, 3));
  const double plug = index_variance(Fn, named_representation(Fn, NamedIndex::central_moment(2))).total;
  // MC variance of sqrt(n)(K_n - 3) for the kurtosis.
  const auto mc = normality_experiment(normal, NamedIndex::even_moment(2), 5000, 1000, 3);
  double mean = 0.0;
  for (double v : mc.replicate_values) mean += v;
  mean /= static_cast<double>(mc.R);
  double ss = 0.0;
  for (double v : mc.replicate_values) ss += (v - mean) * (v - mean);
  const double mc_var = 5000.0 * ss / static_cast<double>(mc.R - 1);
  const bool pass = worst_a2 <= 1e-10 && std::abs(plug - 2.0) <= 0.04 && std::abs(mc_var - 24.0) <= 0.05 * 24.0;
  return {pass, fmt("A(2) err %.1e; plug-in %.4f vs 2 (2%%); MC kurtosis var %.3f vs 24 (5%%)", worst_a2, plug, mc_var)};
}

// ---- 6 ------------------------------------------------------------------------------

Outcome decomposability() {
  std::mt19937_64 g(6);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto v = oracle::random_sample(g, 10 + t);
    const std::size_t K = 1 + t % 6;
    std::uniform_int_distribution<std::size_t> pick(1, K);
    std::vector<std::size_t> labels(v.size());
    for (auto& l : labels) l = pick(g);
    const auto part = SubgroupPartition::from_labels(labels, K);
    const double alpha = 0.5 * static_cast<double>(t % 5);
    worst = std::max(worst, std::abs(gap_estimate(make(v), part, NamedIndex::fgt(1.0 + 0.02 * t, alpha))));
  }
  const auto v = oracle::random_sample(g, 200);
  const std::vector<std::size_t> ones(v.size(), 1);
  const auto single = gap_inference(make(v), SubgroupPartition::from_labels(ones), NamedIndex::shorrocks(2.0),
                                    GapCenter::Gd);
  const double k1 = std::abs(single.gap) + single.parts.theta1_sq + single.parts.theta2_sq + single.parts.theta3_sq;
  const auto out = cli::run_validate(validate_config("decomposability", 11));
  const double p = out.report["ks_pvalue"].get<double>();
  const bool pass = worst <= 1e-12 && k1 == 0.0 && p > 0.01;
  return {pass, fmt("FGT |gap| max %.1e; K=1 total %.1e; Shorrocks KS p %.4f > 0.01", worst, k1, p)};
}

// ---- 7 ------------------------------------------------------------------------------

Outcome temporal() {
  const auto ln = to_model(ParametricFamily::lognormal(0, 1));
  const auto ex = to_model(ParametricFamily::exponential(1.0));
  const auto sen = NamedIndex::sen(1.0);
  const auto indep = temporal_joint_covariance(BivariateFrame{ln, ex, CopulaModel::independence()},
                                               named_representation(ln, sen), named_representation(ex, sen));
  const auto comon = temporal_joint_covariance(BivariateFrame{ln, ln, CopulaModel::comonotone()},
                                               named_representation(ln, sen));

  // Y = 1.1 X: comonotone frame with the scaled margin.
  const auto fx = ParametricFamily::lognormal(0, 1);
  const auto Fx = to_model(fx);
  const auto Fy = to_model(ParametricFamily::lognormal(std::log(1.1), 1));
  const auto fgt1 = NamedIndex::fgt(1.0, 1.0);
  const auto joint = temporal_joint_covariance(BivariateFrame{Fx, Fy, CopulaModel::comonotone()},
                                               named_representation(Fx, fgt1), named_representation(Fy, fgt1));
  constexpr std::size_t n = 2000, R = 1000;
  constexpr std::uint64_t seed = 5;
  std::vector<double> d(R);
  parallel_for(R, 1, [&](std::size_t r) {
    auto x = draw_values(*fx, n, replicate_stream(seed, r));
    std::vector<double> y(n);
    for (std::size_t j = 0; j < n; ++j) y[j] = 1.1 * x[j];
    d[r] = std::sqrt(static_cast<double>(n)) *
           (fgt_estimate(make(y), 1.0, 1.0) - fgt_estimate(make(x), 1.0, 1.0));
  });
  double mean = 0.0;
  for (double v : d) mean += v;
  mean /= R;
  double ss = 0.0;
  for (double v : d) ss += (v - mean) * (v - mean);
  const double mc_var = ss / (R - 1);
  const double rel = std::abs(mc_var / joint.delta_var - 1.0);
  const bool pass = std::abs(indep.gamma22) <= 1e-10 && comon.delta_var <= 1e-8 && rel <= 0.10;
  return {pass, fmt("indep gamma22 %.1e; comonotone delta_var %.1e; MC/analytic - 1 = %.3f", indep.gamma22,
                    comon.delta_var, rel)};
}

// ---- 8 ------------------------------------------------------------------------------

Outcome cre2() {
  const auto out = cli::run_validate(validate_config("cre2", 9));
  std::ostringstream os;
  for (const auto& p : out.report["diagnostics"]) os << cli::fmt12(p["mean_abs"].get<double>()) << " ";
  return {out.exit_code == 0, "sequence " + os.str() + "strictly decreasing"};
}

// ---- 9 ------------------------------------------------------------------------------

double min_eigen(const SymMatrix& m) {
  Eigen::MatrixXd a(m.dim, m.dim);
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) a(i, j) = m(i, j);
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

double asymmetry(const SymMatrix& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < i; ++j) worst = std::max(worst, std::abs(m(i, j) - m(j, i)));
  return worst;
}

Outcome joint_psd() {
  std::mt19937_64 g(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const QuadratureConfig quad{128, 4, 34};
  auto family = [&](int which) -> FamilyPtr {
    switch (which) {
      case 0: return ParametricFamily::uniform(0.0, 1.0 + 3.0 * u(g));
      case 1: return ParametricFamily::exponential(0.5 + 2.0 * u(g));
      case 2: return ParametricFamily::lognormal(u(g) - 0.5, 0.3 + u(g));
      case 3: return ParametricFamily::pareto(0.5 + u(g), 4.5 + 3.0 * u(g));
      default: return ParametricFamily::normal(5.0, 0.5 + u(g));
    }
  };
  auto index = [&](int which, double z) {
    switch (which) {
      case 0: return NamedIndex::fgt(z, 3.0 * u(g));
      case 1: return NamedIndex::sen(z);
      case 2: return NamedIndex::kakwani(z, 1 + static_cast<int>(3 * u(g)));
      case 3: return NamedIndex::shorrocks(z);
      case 4: return NamedIndex::thon(z);
      case 5: return NamedIndex::takayama(z);
      default: return NamedIndex::central_moment(2);
    }
  };
  double worst_eig = 0.0, worst_asym = 0.0;
  for (int t = 0; t < 1000; ++t) {
    FamilyPtr f1 = family(static_cast<int>(5 * u(g)));
    const FamilyPtr f2 = family(static_cast<int>(5 * u(g)));
    const BivariateFrame frame = [&] {
      if (t % 4 == 3) {
        // empirical frame from Gaussian-copula pairs
        const auto npairs = 20 + static_cast<std::size_t>(280 * u(g));
        const double rho = 2.0 * u(g) - 1.0;
        std::normal_distribution<double> z;
        std::vector<double> x(npairs), y(npairs);
        for (std::size_t j = 0; j < npairs; ++j) {
          const double a = z(g), b = rho * a + std::sqrt(1.0 - rho * rho) * z(g);
          x[j] = f1->quantile(std::clamp(normal_cdf(a), 1e-12, 1.0 - 1e-12));
          y[j] = f2->quantile(std::clamp(normal_cdf(b), 1e-12, 1.0 - 1e-12));
        }
        return BivariateFrame::from_pairs(x, y);
      }
      const CopulaModel cop = t % 4 == 0   ? CopulaModel::independence()
                              : t % 4 == 1 ? CopulaModel::comonotone()
                                           : CopulaModel::gaussian(1.98 * u(g) - 0.99);
      return BivariateFrame{to_model(f1, quad), to_model(f2, quad), cop, 32};
    }();
    const double z = f1->quantile(0.15 + 0.7 * u(g));
    const bool heavy = f1->kind() == ParametricFamily::Kind::Pareto || f2->kind() == ParametricFamily::Kind::Pareto;
    const auto I = index(static_cast<int>((heavy ? 6 : 7) * u(g)), z);
    const auto J = index(static_cast<int>((heavy ? 6 : 7) * u(g)), z);
    const RepBuilder bI = [I](const DistributionModel& F) { return named_representation(F, I, false); };
    const RepBuilder bJ = [J](const DistributionModel& F) { return named_representation(F, J, false); };
    SymMatrix m;
    if (t % 2 == 0) {
      m = temporal_joint_covariance(frame, bI).matrix;
    } else {
      m = mutual_variation_covariance(frame, bI(frame.margin1), bI(frame.margin2), bJ(frame.margin1),
                                      bJ(frame.margin2))
              .matrix;
    }
    worst_eig = std::min(worst_eig, min_eigen(m));
    worst_asym = std::max(worst_asym, asymmetry(m));
  }
  return {worst_eig >= -1e-9 && worst_asym <= 1e-12,
          fmt("1000 configs: min eigenvalue %.2e >= -1e-9, max asymmetry %.1e", worst_eig, worst_asym)};
}

// ---- 10 -----------------------------------------------------------------------------

Outcome determinism() {
  struct Run {
    const char* experiment;
    std::uint64_t seed;
  };
  const Run runs[] = {{"coverage", 42}, {"normality", 7}, {"decomposability", 11}, {"cre2", 9}};
  int identical = 0;
  std::string bad;
  for (const auto& r : runs) {
    const auto a = report_bytes(validate_config(r.experiment, r.seed, 1));
    const auto b = report_bytes(validate_config(r.experiment, r.seed, 1));
    const auto c = report_bytes(validate_config(r.experiment, r.seed, 4));
    if (a == b && a == c) {
      ++identical;
    } else {
      bad += std::string(" ") + r.experiment;
    }
  }
  return {identical == 4, fmt("%.0f/4 experiments byte-identical over 2 runs x {1, 4} threads", identical) + bad};
}

}  // namespace

int main() {
  criterion(1, "exact-formula oracles", 1.0, exact_formulas);
  criterion(2, "headcount CI coverage", 60.0, coverage_band);
  criterion(3, "normality of FGT(1)", 120.0, normality);
  criterion(4, "analytic integrals", 10.0, analytic_integrals);
  criterion(5, "moments", 120.0, moments);
  criterion(6, "decomposability exactness", 300.0, decomposability);
  criterion(7, "temporal laws", 120.0, temporal);
  criterion(8, "CRe2 diagnostic", 120.0, cre2);
  criterion(9, "joint-law PSD", 300.0, joint_psd);
  criterion(10, "determinism", 600.0, determinism);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
