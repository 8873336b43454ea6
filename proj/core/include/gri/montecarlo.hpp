// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gri/empirical.hpp"
#include "gri/families.hpp"
#include "gri/indices.hpp"
#include "gri/rng.hpp"

namespace gri {

struct McReport {
  std::string experiment;
  std::vector<double> replicate_values;  // raw estimates, replicate-index order
  std::vector<double> standardized;
  double ks_stat = 0.0;
  double ks_pvalue = 1.0;
  double coverage = 0.0;
  std::uint64_t master_seed = 0;
  std::size_t n = 0;
  std::size_t R = 0;
  double reference_value = 0.0;     // value(F) or gd under the analytic models
  double reference_variance = 0.0;  // analytic Gamma or theta1^2 + theta2^2
  double level = 0.0;
  bool degenerate = false;  // zero reference variance: standardized values are all 0
};

struct McOptions {
  unsigned threads = 1;  // 0 picks hardware concurrency; results never depend on it
  QuadratureConfig quadrature;  // for the analytic reference models
};

// n inverse-cdf draws from seed_stream(stream_seed).
[[nodiscard]] EmpiricalSample draw(const ParametricFamily& family, std::size_t n, std::uint64_t stream_seed);
[[nodiscard]] std::vector<double> draw_values(const ParametricFamily& family, std::size_t n,
                                              const CounterStream& stream);

// Runs body(r) for r in [0, count) on up to `threads` workers. The first failure in index
// order is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

[[nodiscard]] McReport normality_experiment(const FamilyPtr& family, const NamedIndex& index, std::size_t n,
                                            std::size_t R, std::uint64_t master_seed, McOptions options = {});

[[nodiscard]] McReport coverage_experiment(const FamilyPtr& family, const NamedIndex& index, std::size_t n,
                                           std::size_t R, double level, std::uint64_t master_seed,
                                           McOptions options = {});

struct Cre2Point {
  std::size_t n = 0;
  double mean_abs = 0.0;
};

[[nodiscard]] std::vector<Cre2Point> cre2_diagnostic(const FamilyPtr& family, const ScoreFunction& q,
                                                     std::span<const std::size_t> n_grid, std::size_t R,
                                                     std::uint64_t master_seed, McOptions options = {});

// One replicate of the (CRe2) integral on sorted uniforms u; exact for polynomial l of degree <= 6.
[[nodiscard]] double cre2_integral(std::span<const double> sorted_u, const std::function<double(double)>& ell);

[[nodiscard]] McReport decomposability_experiment(std::span<const FamilyPtr> families, std::span<const double> p,
                                                  const NamedIndex& index, std::size_t n, std::size_t R,
                                                  std::uint64_t master_seed, double level = 0.95,
                                                  McOptions options = {});

}  // namespace gri
