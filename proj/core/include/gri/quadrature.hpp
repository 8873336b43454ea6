// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "gri/distribution.hpp"

namespace gri {

// Discrete probability measure on (0, 1): Gauss-Legendre nodes on every panel of the
// model's quantile function, with x = F^{-1}(u) at each node. For empirical models the
// panels are ((j-1)/n, j/n] and x is the j-th order statistic, so sums are exact.
class QuantileGrid {
 public:
  explicit QuantileGrid(const DistributionModel& F, std::span<const double> kinks = {});
  // Nodes on caller-chosen panel edges; each panel must lie inside one step for
  // empirical models.
  QuantileGrid(const DistributionModel& F, std::span<const double> edges, int order);
  // Explicit nodes u_k in (0, 1) with probability weights w_k.
  static QuantileGrid from_points(const DistributionModel& F, std::vector<double> u, std::vector<double> w);

  [[nodiscard]] std::size_t size() const noexcept { return u_.size(); }
  [[nodiscard]] std::span<const double> u() const noexcept { return u_; }
  [[nodiscard]] std::span<const double> weights() const noexcept { return w_; }
  [[nodiscard]] std::span<const double> x() const noexcept { return x_; }

  // f at every node; throws NonFiniteIntegral on a non-finite value.
  [[nodiscard]] std::vector<double> evaluate(const ScoreFunction& f) const;
  [[nodiscard]] double integrate(const ScoreFunction& f) const;

 private:
  QuantileGrid() = default;
  void fill(const DistributionModel& F, std::span<const double> edges, int order);
  std::vector<double> u_;
  std::vector<double> w_;
  std::vector<double> x_;
};

// Lambda(u) = int_u^1 q(F^{-1}(t)) dt. Exact for empirical models; Gauss-Legendre per
// panel plus a partial panel otherwise.
class TailIntegral {
 public:
  TailIntegral(const DistributionModel& F, const ScoreFunction& q, std::span<const double> kinks = {});

  [[nodiscard]] double operator()(double u) const;
  [[nodiscard]] std::vector<double> at(std::span<const double> u) const;
  // int_{y >= x} q(y) dF(y); the inclusive form matters only for empirical atoms.
  [[nodiscard]] double above(double x) const;
  [[nodiscard]] bool zero() const noexcept { return zero_; }

 private:
  DistributionModel F_;
  ScoreFunction q_;
  bool zero_ = false;
  int order_ = 2;
  std::vector<double> edges_;
  std::vector<double> ell_;     // empirical: q at each order statistic
  std::vector<double> suffix_;  // suffix_[p] = integral over panels p, p+1, ...
};

// Weighted moments for a probability vector w (sums to one).
[[nodiscard]] double weighted_mean(std::span<const double> w, std::span<const double> a);
[[nodiscard]] double weighted_covariance(std::span<const double> w, std::span<const double> a,
                                         std::span<const double> b);

}  // namespace gri
