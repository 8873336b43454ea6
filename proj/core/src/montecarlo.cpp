// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "gri/decomposability.hpp"
#include "gri/error.hpp"
#include "gri/gauss_legendre.hpp"
#include "gri/ks.hpp"
#include "gri/normal.hpp"
#include "gri/representation.hpp"

namespace gri {
namespace {

constexpr double kZeroVariance = 1e-300;

void require_sizes(std::size_t n, std::size_t R) {
  if (n == 0) throw Error(ErrorCode::BadParams, "experiments need n >= 1");
  if (R == 0) throw Error(ErrorCode::BadParams, "experiments need R >= 1");
}

void finish_ks(McReport& report) {
  if (report.degenerate) {
    report.ks_stat = 0.0;
    report.ks_pvalue = 1.0;
    return;
  }
  const KsResult ks = ks_test(report.standardized, [](double z) { return normal_cdf(z); });
  report.ks_stat = ks.statistic;
  report.ks_pvalue = ks.pvalue;
}

}  // namespace

std::vector<double> draw_values(const ParametricFamily& family, std::size_t n, const CounterStream& stream) {
  if (n == 0) throw Error(ErrorCode::BadParams, "draw needs n >= 1");
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = family.quantile(stream.uniform(k));
  return out;
}

EmpiricalSample draw(const ParametricFamily& family, std::size_t n, std::uint64_t stream_seed) {
  const auto v = draw_values(family, n, seed_stream(stream_seed));
  return EmpiricalSample::build(v);
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  if (threads <= 1) {
    for (std::size_t r = 0; r < count; ++r) {
      try {
        body(r);
      } catch (...) {
        errors[r] = std::current_exception();
        break;
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t r = next.fetch_add(1);
          if (r >= count || failed.load()) return;
          try {
            body(r);
          } catch (...) {
            errors[r] = std::current_exception();
            failed.store(true);
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

McReport normality_experiment(const FamilyPtr& family, const NamedIndex& index, std::size_t n, std::size_t R,
                              std::uint64_t master_seed, McOptions options) {
  require_sizes(n, R);
  index.validate();
  const DistributionModel F = to_model(family, options.quadrature);
  const GriRepresentation rep = named_representation(F, index);
  const double value = rep.value(F);
  const double gamma = index_variance(F, rep).total;
  // relative to E h^2 so a constant h is caught despite round-off in its variance
  const double h2 = F.integrate_score([&](double x) { return rep.h(x) * rep.h(x); }, rep.kinks);
  if (!(gamma > 1e-12 * std::max(1.0, h2))) throw Error(ErrorCode::ZeroVariance, "analytic variance is zero", gamma);

  McReport report;
  report.experiment = "normality";
  report.master_seed = master_seed;
  report.n = n;
  report.R = R;
  report.reference_value = value;
  report.reference_variance = gamma;
  report.replicate_values.resize(R);
  report.standardized.resize(R);
  const double scale = std::sqrt(static_cast<double>(n) / gamma);
  parallel_for(R, options.threads, [&](std::size_t r) {
    const auto sample = EmpiricalSample::build(draw_values(*family, n, replicate_stream(master_seed, r)));
    const double est = named_estimate(sample, index);
    report.replicate_values[r] = est;
    report.standardized[r] = scale * (est - value);
  });
  finish_ks(report);
  return report;
}

McReport coverage_experiment(const FamilyPtr& family, const NamedIndex& index, std::size_t n, std::size_t R,
                             double level, std::uint64_t master_seed, McOptions options) {
  require_sizes(n, R);
  index.validate();
  if (!(level > 0.0 && level < 1.0)) throw Error(ErrorCode::BadLevel, "level must be in (0, 1)", level);
  const DistributionModel F = to_model(family, options.quadrature);
  const GriRepresentation rep = named_representation(F, index);
  const double value = rep.value(F);

  McReport report;
  report.experiment = "coverage";
  report.master_seed = master_seed;
  report.n = n;
  report.R = R;
  report.level = level;
  report.reference_value = value;
  report.reference_variance = index_variance(F, rep).total;
  report.replicate_values.resize(R);
  report.standardized.resize(R);
  std::vector<char> covered(R, 0);
  parallel_for(R, options.threads, [&](std::size_t r) {
    const auto sample = EmpiricalSample::build(draw_values(*family, n, replicate_stream(master_seed, r)));
    const double est = named_estimate(sample, index);
    const DistributionModel Fn = DistributionModel::empirical(sample);
    // Small samples may put every observation on one side of the line.
    const double var = index_variance(Fn, named_representation(Fn, index, false)).total;
    const Interval ci = confidence_interval(est, var, n, level);
    report.replicate_values[r] = est;
    report.standardized[r] = var > kZeroVariance ? std::sqrt(static_cast<double>(n) / var) * (est - value) : 0.0;
    covered[r] = (ci.lo <= value && value <= ci.hi) ? 1 : 0;
  });
  std::size_t hits = 0;
  for (char c : covered) hits += static_cast<std::size_t>(c);
  report.coverage = static_cast<double>(hits) / static_cast<double>(R);
  finish_ks(report);
  return report;
}

double cre2_integral(std::span<const double> sorted_u, const std::function<double(double)>& ell) {
  const std::size_t n = sorted_u.size();
  if (n == 0) throw Error(ErrorCode::EmptySample, "diagnostic needs observations");
  const GaussRule& rule = gauss_legendre(4);
  const double width = 1.0 / static_cast<double>(n);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    // V_n = U_(j) on ((j-1)/n, j/n]
    const double uj = sorted_u[j];
    const double lj = ell(uj);
    const double a = static_cast<double>(j) * width;
    double cell = 0.0;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double s = a + 0.5 * width * (rule.nodes[g] + 1.0);
      cell += rule.weights[g] * (s - uj) * (lj - ell(s));
    }
    acc += 0.5 * width * cell;
  }
  if (!std::isfinite(acc)) throw Error(ErrorCode::NonFiniteIntegral, "diagnostic integral is not finite");
  return std::sqrt(static_cast<double>(n)) * acc;
}

std::vector<Cre2Point> cre2_diagnostic(const FamilyPtr& family, const ScoreFunction& q,
                                       std::span<const std::size_t> n_grid, std::size_t R,
                                       std::uint64_t master_seed, McOptions options) {
  if (R == 0) throw Error(ErrorCode::BadParams, "experiments need R >= 1");
  const auto ell = [&](double s) { return q(family->quantile(std::clamp(s, 1e-300, 1.0 - 0x1.0p-53))); };
  std::vector<Cre2Point> out;
  out.reserve(n_grid.size());
  const CounterStream root = seed_stream(master_seed);
  for (std::size_t g = 0; g < n_grid.size(); ++g) {
    const std::size_t n = n_grid[g];
    if (n == 0) throw Error(ErrorCode::BadParams, "n_grid entries must be >= 1");
    const CounterStream level_stream = root.split(n);
    std::vector<double> values(R);
    parallel_for(R, options.threads, [&](std::size_t r) {
      const CounterStream s = level_stream.split(r);
      std::vector<double> u(n);
      for (std::size_t k = 0; k < n; ++k) u[k] = s.uniform(k);
      std::sort(u.begin(), u.end());
      values[r] = std::abs(cre2_integral(u, ell));
    });
    double acc = 0.0;
    for (double v : values) acc += v;
    out.push_back({n, acc / static_cast<double>(R)});
  }
  return out;
}

McReport decomposability_experiment(std::span<const FamilyPtr> families, std::span<const double> p,
                                    const NamedIndex& index, std::size_t n, std::size_t R,
                                    std::uint64_t master_seed, double level, McOptions options) {
  require_sizes(n, R);
  index.validate();
  const std::size_t K = families.size();
  if (K == 0 || p.size() != K) throw Error(ErrorCode::BadWeights, "need one weight per group family");
  double total = 0.0;
  for (double w : p) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::BadWeights, "weights must be nonnegative", w);
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorCode::BadWeights, "weights must sum to 1", total);

  std::vector<DistributionModel> models;
  for (const auto& f : families) {
    models.push_back(to_model(f, options.quadrature));
  }
  const DistributionModel mixture = DistributionModel::mixture(models, p);
  const DecompositionVariance dv = gap_variance(p, models, index);
  double gd = named_representation(mixture, index, false).value(mixture);
  for (std::size_t i = 0; i < K; ++i) {
    if (p[i] > 0.0) gd -= p[i] * dv.group_value[i];
  }
  const double var = dv.theta1_sq + dv.theta2_sq;

  McReport report;
  report.experiment = "decomposability";
  report.master_seed = master_seed;
  report.n = n;
  report.R = R;
  report.level = level;
  report.reference_value = gd;
  report.reference_variance = var;
  report.degenerate = !(var > 1e-14);
  report.replicate_values.resize(R);
  report.standardized.resize(R);
  std::vector<double> cumulative(K);
  std::partial_sum(p.begin(), p.end(), cumulative.begin());
  cumulative.back() = 1.0;

  std::vector<char> covered(R, 0);
  const double scale = report.degenerate ? 0.0 : std::sqrt(static_cast<double>(n) / var);
  parallel_for(R, options.threads, [&](std::size_t r) {
    const CounterStream s = replicate_stream(master_seed, r);
    std::vector<double> x(n);
    std::vector<std::size_t> labels(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double u = s.uniform(2 * j);
      auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
      std::size_t g = static_cast<std::size_t>(it - cumulative.begin());
      if (g >= K) g = K - 1;
      while (p[g] == 0.0) g = (g + 1) % K;
      labels[j] = g + 1;
      x[j] = families[g]->quantile(s.uniform(2 * j + 1));
    }
    const auto sample = EmpiricalSample::build(x);
    const auto partition = SubgroupPartition::from_labels(labels, K);
    const GapInference inf = gap_inference(sample, partition, index, GapCenter::Gd, level);
    report.replicate_values[r] = inf.gap;
    report.standardized[r] = scale * (inf.gap - gd);
    covered[r] = (inf.ci.lo <= gd && gd <= inf.ci.hi) ? 1 : 0;
  });
  std::size_t hits = 0;
  for (char c : covered) hits += static_cast<std::size_t>(c);
  report.coverage = static_cast<double>(hits) / static_cast<double>(R);
  finish_ks(report);
  return report;
}

}  // namespace gri
