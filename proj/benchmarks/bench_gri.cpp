// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <vector>

#include "gri/decomposability.hpp"
#include "gri/montecarlo.hpp"
#include "gri/temporal.hpp"

namespace {

using namespace gri;

EmpiricalSample lognormal_sample(std::size_t n, std::uint64_t seed) {
  return draw(*ParametricFamily::lognormal(0, 1), n, seed);
}

void BM_SenEstimate(benchmark::State& state) {
  const auto s = lognormal_sample(static_cast<std::size_t>(state.range(0)), 1);
  const auto idx = NamedIndex::sen(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(named_estimate(s, idx));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SenEstimate)->Range(1 << 10, 1 << 18);

void BM_PlugInVariance(benchmark::State& state) {
  const auto F = DistributionModel::empirical(lognormal_sample(static_cast<std::size_t>(state.range(0)), 2));
  const auto idx = NamedIndex::shorrocks(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(index_variance(F, named_representation(F, idx)).total);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PlugInVariance)->Range(1 << 10, 1 << 17);

void BM_AnalyticVariance(benchmark::State& state) {
  QuadratureConfig q;
  q.grid = static_cast<int>(state.range(0));
  const auto F = to_model(ParametricFamily::lognormal(0, 1), q);
  const auto idx = NamedIndex::sen(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(index_variance(F, named_representation(F, idx)).total);
}
BENCHMARK(BM_AnalyticVariance)->RangeMultiplier(4)->Range(128, 8192);

void BM_GaussianCopulaJoint(benchmark::State& state) {
  QuadratureConfig q;
  q.grid = 512;
  const auto F1 = to_model(ParametricFamily::lognormal(0, 1), q);
  const auto F2 = to_model(ParametricFamily::lognormal(0.1, 1), q);
  const BivariateFrame frame{F1, F2, CopulaModel::gaussian(0.6), static_cast<int>(state.range(0))};
  const auto idx = NamedIndex::fgt(1.0, 1.0);
  const RepBuilder build = [idx](const DistributionModel& F) { return named_representation(F, idx); };
  for (auto _ : state) benchmark::DoNotOptimize(temporal_joint_covariance(frame, build).delta_var);
}
BENCHMARK(BM_GaussianCopulaJoint)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond);

void BM_EmpiricalCopulaJoint(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = lognormal_sample(n, 3).input_values();
  std::vector<double> y(n);
  for (std::size_t j = 0; j < n; ++j) y[j] = 1.1 * x[j];
  const auto frame = BivariateFrame::from_pairs(x, y);
  const auto idx = NamedIndex::sen(1.0);
  const RepBuilder build = [idx](const DistributionModel& F) { return named_representation(F, idx); };
  for (auto _ : state) benchmark::DoNotOptimize(temporal_joint_covariance(frame, build).delta_var);
}
BENCHMARK(BM_EmpiricalCopulaJoint)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_GapInference(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto s = lognormal_sample(n, 4);
  std::vector<std::size_t> labels(n);
  for (std::size_t j = 0; j < n; ++j) labels[j] = 1 + j % 3;
  const auto part = SubgroupPartition::from_labels(labels);
  const auto idx = NamedIndex::shorrocks(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(gap_inference(s, part, idx, GapCenter::Gd).variance);
}
BENCHMARK(BM_GapInference)->Range(1 << 8, 1 << 14)->Unit(benchmark::kMillisecond);

void BM_NormalityExperiment(benchmark::State& state) {
  const auto fam = ParametricFamily::lognormal(0, 1);
  const auto idx = NamedIndex::fgt(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(normality_experiment(fam, idx, 2000, 200, 7).ks_stat);
}
BENCHMARK(BM_NormalityExperiment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
