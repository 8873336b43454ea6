// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gri/empirical.hpp"

namespace gri {

// A continuous, strictly increasing cdf on its support with an exact inverse.
class ContinuousLaw {
 public:
  virtual ~ContinuousLaw() = default;
  [[nodiscard]] virtual double cdf(double x) const = 0;
  // Defined on the open interval (0, 1).
  [[nodiscard]] virtual double quantile(double s) const = 0;
  [[nodiscard]] virtual std::string describe() const = 0;
};

// Knobs for integrals over s in (0, 1) under a parametric model. Empirical models ignore
// them: their integrals are exact sums over the n steps of the quantile function.
struct QuadratureConfig {
  int grid = 2048;       // uniform panels on (0, 1)
  int order = 4;         // Gauss-Legendre points per panel
  int tail_levels = 34;  // extra panels halving towards 0 and 1
};

class DistributionModel {
 public:
  enum class Kind { Empirical, Parametric };

  static DistributionModel empirical(EmpiricalSample sample);
  static DistributionModel parametric(std::shared_ptr<const ContinuousLaw> law, QuadratureConfig config = {});

  // sum_i w_i F_i. Empirical components need weights proportional to their sizes (the
  // result is the pooled sample); parametric components accept any positive weights.
  static DistributionModel mixture(std::span<const DistributionModel> components, std::span<const double> weights);

  [[nodiscard]] Kind kind() const noexcept;
  [[nodiscard]] bool is_empirical() const noexcept { return kind() == Kind::Empirical; }

  [[nodiscard]] double cdf(double x) const;
  // Generalized inverse; s in (0, 1] for empirical models, (0, 1) otherwise.
  [[nodiscard]] double quantile(double s) const;

  // int f dF. `kinks` lists x-locations where f is not smooth; parametric quadrature
  // puts panel edges at F(kink).
  [[nodiscard]] double integrate_score(const ScoreFunction& f, std::span<const double> kinks = {}) const;

  // Panel edges 0 = e_0 < ... < e_P = 1 used for every integral in s.
  [[nodiscard]] std::vector<double> panel_edges(std::span<const double> kinks = {}) const;
  // Gauss-Legendre points per panel (2 for empirical models: integrands are at most quadratic).
  [[nodiscard]] int panel_order() const noexcept;

  [[nodiscard]] const EmpiricalSample& sample() const;
  [[nodiscard]] const ContinuousLaw& law() const;
  [[nodiscard]] std::shared_ptr<const ContinuousLaw> law_ptr() const;
  [[nodiscard]] const QuadratureConfig& quadrature() const noexcept;
  [[nodiscard]] DistributionModel with_quadrature(QuadratureConfig config) const;
  [[nodiscard]] std::string describe() const;

 private:
  struct Impl;
  explicit DistributionModel(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// (1/n) sum (F_n(X_j) - F(X_j)) q(X_j).
[[nodiscard]] double residual_stat(const EmpiricalSample& sample, const ScoreFunction& q, const DistributionModel& F);

}  // namespace gri
