// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>

#include "gri/distribution.hpp"

namespace gri {

class ParametricFamily final : public ContinuousLaw {
 public:
  enum class Kind { Uniform, Exponential, LogNormal, Pareto, Normal };

  // Parameter checks throw BadParams (e.g. uniform(c, c), pareto with a <= 2).
  static std::shared_ptr<const ParametricFamily> uniform(double a, double b);
  static std::shared_ptr<const ParametricFamily> exponential(double lambda);
  static std::shared_ptr<const ParametricFamily> lognormal(double mu, double sigma);
  static std::shared_ptr<const ParametricFamily> pareto(double xm, double a);
  static std::shared_ptr<const ParametricFamily> normal(double mu, double sigma);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double p1() const noexcept { return p1_; }
  [[nodiscard]] double p2() const noexcept { return p2_; }

  [[nodiscard]] double cdf(double x) const override;
  [[nodiscard]] double quantile(double s) const override;
  [[nodiscard]] std::string describe() const override;

  [[nodiscard]] double mean() const noexcept;
  [[nodiscard]] double variance() const noexcept;

  ParametricFamily(Kind kind, double p1, double p2) : kind_(kind), p1_(p1), p2_(p2) {}

 private:
  Kind kind_;
  double p1_;
  double p2_;
};

using FamilyPtr = std::shared_ptr<const ParametricFamily>;

[[nodiscard]] DistributionModel to_model(const FamilyPtr& family, QuadratureConfig config = {});

}  // namespace gri
