// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "gri/distribution.hpp"
#include "gri/quadrature.hpp"

namespace gri {

// sqrt(n)(I_n - I) = G_n(h) + int_0^1 G_n(1{. <= F^{-1}(s)}) q(F^{-1}(s)) ds + o_P(1).
struct GriRepresentation {
  ScoreFunction h;
  ScoreFunction q;  // empty means q == 0
  std::function<double(const DistributionModel&)> value;
  std::vector<double> kinks;  // x-locations where h or q is not smooth
};

struct CovarianceEstimate {
  double gamma1 = 0.0;  // Var h(X)
  double gamma2 = 0.0;  // quantile-process term
  double gamma3 = 0.0;  // cross term
  double total = 0.0;   // gamma1 + gamma2 + 2 gamma3
};

[[nodiscard]] double score_covariance(const DistributionModel& F, const ScoreFunction& f, const ScoreFunction& g,
                                      std::span<const double> kinks = {});

[[nodiscard]] double indicator_cov_closed_form(double s, double t);

// int_0^1 [int_0^s h(F^{-1}(u)) du - s E h] q(F^{-1}(s)) ds
[[nodiscard]] double beta_cross_cov(const DistributionModel& F, const ScoreFunction& h, const ScoreFunction& q,
                                    std::span<const double> kinks = {});

// int int (min(s,t) - st) q1(F^{-1}(s)) q2(F^{-1}(t)) ds dt
[[nodiscard]] double beta_beta_cov(const DistributionModel& F, const ScoreFunction& q1, const ScoreFunction& q2,
                                   std::span<const double> kinks = {});

[[nodiscard]] CovarianceEstimate index_variance(const DistributionModel& F, const GriRepresentation& rep);

[[nodiscard]] double index_cross_covariance(const DistributionModel& F, const GriRepresentation& repI,
                                            const GriRepresentation& repJ);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

[[nodiscard]] Interval confidence_interval(double estimate, double variance, std::size_t n, double level);

// Influence function psi(u) = h(F^{-1}(u)) + Lambda(u) of a representation at grid nodes,
// before centering. Every covariance above is a weighted covariance of these vectors.
struct InfluenceValues {
  std::vector<double> h;
  std::vector<double> lambda;
  [[nodiscard]] std::vector<double> total() const;
};

[[nodiscard]] InfluenceValues influence_values(const DistributionModel& F, const GriRepresentation& rep,
                                               const QuantileGrid& grid, std::span<const double> kinks);

[[nodiscard]] std::vector<double> merge_kinks(std::span<const double> a, std::span<const double> b);

// Ratio A/B of two representations: h = h_A/B - (A/B^2) h_B, same for q; A and B are the
// values at F. Throws ZeroDenominator when B(F) = 0.
[[nodiscard]] GriRepresentation compose_ratio(const DistributionModel& F, const GriRepresentation& top,
                                              const GriRepresentation& bottom);

// Representation of the mean, I = int x dF.
[[nodiscard]] GriRepresentation mean_representation();

}  // namespace gri
