// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/decomposability.hpp"

#include <algorithm>
#include <cmath>

#include "gri/error.hpp"
#include "gri/quadrature.hpp"

namespace gri {

SubgroupPartition SubgroupPartition::from_labels(std::span<const std::size_t> labels, std::size_t K,
                                                 std::span<const double> weights) {
  if (labels.empty()) throw Error(ErrorCode::EmptySample, "partition has no observations");
  SubgroupPartition p;
  p.labels.assign(labels.begin(), labels.end());
  const std::size_t top = *std::max_element(labels.begin(), labels.end());
  p.K = K == 0 ? top : K;
  if (top > p.K || std::find(labels.begin(), labels.end(), std::size_t{0}) != labels.end()) {
    throw Error(ErrorCode::BadWeights, "labels must lie in 1..K");
  }
  p.counts.assign(p.K, 0);
  for (std::size_t l : labels) ++p.counts[l - 1];
  const auto n = static_cast<double>(labels.size());
  if (weights.empty()) {
    p.weights.resize(p.K);
    for (std::size_t i = 0; i < p.K; ++i) p.weights[i] = static_cast<double>(p.counts[i]) / n;
  } else {
    if (weights.size() != p.K) throw Error(ErrorCode::BadWeights, "need one weight per group");
    double total = 0.0;
    for (double w : weights) {
      if (!(w >= 0.0)) throw Error(ErrorCode::BadWeights, "weights must be nonnegative", w);
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorCode::BadWeights, "weights must sum to 1", total);
    p.weights.assign(weights.begin(), weights.end());
  }
  return p;
}

namespace {

std::vector<std::vector<double>> split_by_group(const EmpiricalSample& sample, const SubgroupPartition& partition) {
  if (partition.labels.size() != sample.n()) {
    throw Error(ErrorCode::ColumnCountMismatch, "one label per observation is required");
  }
  const auto values = sample.input_values();
  std::vector<std::vector<double>> out(partition.K);
  for (std::size_t j = 0; j < values.size(); ++j) out[partition.labels[j] - 1].push_back(values[j]);
  return out;
}

}  // namespace

double gap_estimate(const EmpiricalSample& sample, const SubgroupPartition& partition, const NamedIndex& index) {
  const auto groups = split_by_group(sample, partition);
  const auto n = static_cast<double>(sample.n());
  std::vector<double> terms;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    terms.push_back(static_cast<double>(g.size()) / n * named_estimate(EmpiricalSample::build(g), index));
  }
  // summing in sorted order makes the result independent of the group numbering
  std::sort(terms.begin(), terms.end());
  double gd = named_estimate(sample, index);
  for (double t : terms) gd -= t;
  return gd;
}

DecompositionVariance gap_variance(std::span<const double> p, std::span<const DistributionModel> groups,
                                   const RepBuilder& build, const GriRepresentation& global) {
  if (p.size() != groups.size() || p.empty()) throw Error(ErrorCode::BadWeights, "need one weight per group");
  double total = 0.0;
  for (double w : p) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw Error(ErrorCode::BadWeights, "weights must be nonnegative", w);
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorCode::BadWeights, "weights must sum to 1", total);

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) active.push_back(i);
  }

  // T_h(x) = int_{y >= x} q dF_h with the global q, one per group.
  std::vector<TailIntegral> tails;
  tails.reserve(groups.size());
  for (const auto& F : groups) tails.emplace_back(F, global.q, global.kinks);

  DecompositionVariance out;
  out.L.assign(p.size(), 0.0);
  out.M.assign(p.size(), 0.0);
  out.group_value.assign(p.size(), 0.0);

  for (std::size_t i : active) {
    const DistributionModel& Fi = groups[i];
    const GriRepresentation rep_i = build(Fi);
    const auto kinks = merge_kinks(global.kinks, rep_i.kinks);
    const QuantileGrid grid(Fi, kinks);
    auto w = grid.weights();
    auto u = grid.u();
    auto x = grid.x();

    const auto h = global.h ? grid.evaluate(global.h) : std::vector<double>(grid.size(), 0.0);
    const auto hi = rep_i.h ? grid.evaluate(rep_i.h) : std::vector<double>(grid.size(), 0.0);
    const auto lam_q = TailIntegral(Fi, global.q, kinks).at(u);
    const auto lam_qi = TailIntegral(Fi, rep_i.q, kinks).at(u);

    std::vector<double> D(grid.size());
    std::vector<double> R(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      D[k] = h[k] - hi[k];
      R[k] = p[i] * lam_q[k] - lam_qi[k];
    }
    std::vector<std::vector<double>> S;
    for (std::size_t g : active) {
      if (g == i) continue;
      std::vector<double> s(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) s[k] = p[g] * tails[g].above(x[k]);
      S.push_back(std::move(s));
    }

    const double pi = p[i];
    out.A1 += pi * weighted_covariance(w, D, D);
    out.A2 += pi * weighted_covariance(w, R, R);
    out.B1 += pi * weighted_covariance(w, D, R);
    for (std::size_t a = 0; a < S.size(); ++a) {
      out.A31 += pi * weighted_covariance(w, S[a], S[a]);
      out.B2 += pi * weighted_covariance(w, R, S[a]);
      out.B3 += pi * weighted_covariance(w, D, S[a]);
      for (std::size_t b = 0; b < S.size(); ++b) {
        if (b != a) out.A32 += pi * weighted_covariance(w, S[a], S[b]);
      }
    }

    out.group_value[i] = rep_i.value(Fi);
    double cross = 0.0;
    if (global.q) {
      for (std::size_t a : active) {
        const QuantileGrid ga(groups[a], global.kinks);
        const auto qa = ga.evaluate(global.q);
        double acc = 0.0;
        for (std::size_t k = 0; k < ga.size(); ++k) acc += ga.weights()[k] * Fi.cdf(ga.x()[k]) * qa[k];
        cross += p[a] * acc;
      }
    }
    const double mean_h = weighted_mean(w, h);
    out.M[i] = mean_h + cross;
    out.L[i] = out.M[i] - out.group_value[i];
  }

  out.theta1_sq = out.A1 + out.A2 + out.A31 + out.A32 + 2.0 * (out.B1 + out.B2 + out.B3);
  auto weighted_var = [&](const std::vector<double>& v) {
    double m = 0.0;
    double m2 = 0.0;
    for (std::size_t i : active) {
      m += p[i] * v[i];
      m2 += p[i] * v[i] * v[i];
    }
    return std::max(0.0, m2 - m * m);
  };
  out.theta2_sq = weighted_var(out.L);
  out.theta3_sq = weighted_var(out.M);
  for (double v : {out.A1, out.A2, out.A31, out.A32, out.B1, out.B2, out.B3, out.theta1_sq}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteIntegral, "decomposition constant is not finite");
  }
  if (out.theta1_sq < -1e-9) throw Error(ErrorCode::NegativeVariance, "theta1^2 is negative", out.theta1_sq);
  out.theta1_sq = std::max(out.theta1_sq, 0.0);
  return out;
}

DecompositionVariance gap_variance(std::span<const double> p, std::span<const DistributionModel> groups,
                                   const NamedIndex& index) {
  std::vector<DistributionModel> kept;
  std::vector<double> wk;
  for (std::size_t i = 0; i < groups.size() && i < p.size(); ++i) {
    if (p[i] > 0.0) {
      kept.push_back(groups[i]);
      wk.push_back(p[i]);
    }
  }
  const auto mixture = DistributionModel::mixture(kept, wk);
  const auto global = named_representation(mixture, index, false);
  RepBuilder build = [index](const DistributionModel& F) { return named_representation(F, index, false); };
  return gap_variance(p, groups, build, global);
}

GapInference gap_inference(const EmpiricalSample& sample, const SubgroupPartition& partition, const NamedIndex& index,
                           GapCenter center, double level) {
  const auto split = split_by_group(sample, partition);
  const auto n = static_cast<double>(sample.n());
  GapInference out;
  out.counts.resize(partition.K);
  out.weights.resize(partition.K);
  out.group_estimate.assign(partition.K, 0.0);
  std::vector<DistributionModel> models;
  std::vector<double> p;
  for (std::size_t i = 0; i < partition.K; ++i) {
    out.counts[i] = split[i].size();
    out.weights[i] = static_cast<double>(split[i].size()) / n;
    if (split[i].empty()) continue;
    const auto s = EmpiricalSample::build(split[i]);
    out.group_estimate[i] = named_estimate(s, index);
    models.push_back(DistributionModel::empirical(s));
    p.push_back(out.weights[i]);
  }
  out.gap = gap_estimate(sample, partition, index);
  const auto global = named_representation(DistributionModel::empirical(sample), index, false);
  RepBuilder build = [index](const DistributionModel& F) { return named_representation(F, index, false); };
  out.parts = gap_variance(p, models, build, global);
  // Report L, M, I_i against the caller's group numbering.
  DecompositionVariance& parts = out.parts;
  std::vector<double> L(partition.K, 0.0), M(partition.K, 0.0), I(partition.K, 0.0);
  for (std::size_t i = 0, a = 0; i < partition.K; ++i) {
    if (split[i].empty()) continue;
    L[i] = parts.L[a];
    M[i] = parts.M[a];
    I[i] = parts.group_value[a];
    ++a;
  }
  parts.L = std::move(L);
  parts.M = std::move(M);
  parts.group_value = std::move(I);
  out.variance = parts.theta1_sq + (center == GapCenter::Gd ? parts.theta2_sq : parts.theta3_sq);
  out.ci = confidence_interval(out.gap, out.variance, sample.n(), level);
  return out;
}

}  // namespace gri
