// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gri/distribution.hpp"
#include "gri/indices.hpp"
#include "gri/representation.hpp"
#include "gri/temporal.hpp"

namespace gri {

struct SubgroupPartition {
  std::vector<std::size_t> labels;  // group id in 1..K per observation, input order
  std::size_t K = 0;
  std::vector<std::size_t> counts;
  std::vector<double> weights;  // sum to 1; default counts / n

  // K = 0 takes the largest label. Throws BadWeights on inconsistent weights or labels.
  static SubgroupPartition from_labels(std::span<const std::size_t> labels, std::size_t K = 0,
                                       std::span<const double> weights = {});
};

struct DecompositionVariance {
  double A1 = 0.0, A2 = 0.0, A31 = 0.0, A32 = 0.0;
  double B1 = 0.0, B2 = 0.0, B3 = 0.0;
  std::vector<double> L;
  std::vector<double> M;
  std::vector<double> group_value;  // I_i
  double theta1_sq = 0.0;
  double theta2_sq = 0.0;
  double theta3_sq = 0.0;
};

// gd_n = I_n - sum (n_i / n) I_n^(i). Empty groups contribute nothing.
[[nodiscard]] double gap_estimate(const EmpiricalSample& sample, const SubgroupPartition& partition,
                                  const NamedIndex& index);

// Groups with weight 0 are skipped. `global` is the representation under the mixture
// sum p_i F_i; `build` gives each group's own representation.
[[nodiscard]] DecompositionVariance gap_variance(std::span<const double> p, std::span<const DistributionModel> groups,
                                                 const RepBuilder& build, const GriRepresentation& global);
// Same, for a catalog index: the global model is the mixture of the groups.
[[nodiscard]] DecompositionVariance gap_variance(std::span<const double> p, std::span<const DistributionModel> groups,
                                                 const NamedIndex& index);

enum class GapCenter { Gd, Gd0 };

struct GapInference {
  double gap = 0.0;
  double variance = 0.0;  // theta1^2 + theta2^2 (Gd) or theta1^2 + theta3^2 (Gd0)
  Interval ci;
  DecompositionVariance parts;
  std::vector<double> group_estimate;
  std::vector<std::size_t> counts;
  std::vector<double> weights;
};

[[nodiscard]] GapInference gap_inference(const EmpiricalSample& sample, const SubgroupPartition& partition,
                                         const NamedIndex& index, GapCenter center, double level = 0.95);

}  // namespace gri
