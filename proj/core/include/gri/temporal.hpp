// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "gri/distribution.hpp"
#include "gri/representation.hpp"

namespace gri {

class CopulaModel {
 public:
  enum class Kind { Independence, Comonotone, Gaussian, Empirical };

  static CopulaModel independence();
  static CopulaModel comonotone();
  static CopulaModel gaussian(double rho);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double rho() const noexcept { return rho_; }
  [[nodiscard]] double eval(double u, double v) const;

  // Empirical kind only: max-ranks and 0-based ordinal positions of each pair.
  [[nodiscard]] std::size_t size() const noexcept;
  [[nodiscard]] std::span<const std::size_t> rank_x() const;
  [[nodiscard]] std::span<const std::size_t> rank_y() const;
  [[nodiscard]] std::span<const std::size_t> position_x() const;
  [[nodiscard]] std::span<const std::size_t> position_y() const;

 private:
  friend CopulaModel empirical_copula(std::span<const double> x, std::span<const double> y);
  struct Ranks {
    std::vector<std::size_t> rx, ry, px, py;
  };
  [[nodiscard]] const Ranks& empirical_ranks() const;
  Kind kind_ = Kind::Independence;
  double rho_ = 0.0;
  std::shared_ptr<const Ranks> ranks_;
};

// C_n(u, v) = (1/n) #{j : R^x_j / n <= u, R^y_j / n <= v}, max-ranks. Throws TooFewPairs (n < 2).
[[nodiscard]] CopulaModel empirical_copula(std::span<const double> x, std::span<const double> y);
[[nodiscard]] CopulaModel empirical_copula(std::span<const std::pair<double, double>> pairs);

struct BivariateFrame {
  DistributionModel margin1;
  DistributionModel margin2;
  CopulaModel copula;
  int copula_grid = 512;  // cells per axis for the Gaussian copula

  // Paired observations: empirical margins plus their empirical copula.
  static BivariateFrame from_pairs(std::span<const double> x, std::span<const double> y);
};

struct SymMatrix {
  std::size_t dim = 0;
  std::vector<double> a;  // row-major

  SymMatrix() = default;
  explicit SymMatrix(std::size_t d) : dim(d), a(d * d, 0.0) {}
  [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
  double& operator()(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  // v' M w
  [[nodiscard]] double bilinear(std::span<const double> v, std::span<const double> w) const;
};

struct JointCovariance {
  SymMatrix matrix;  // (I_1, I_2) or (I_1, I_2, J_1, J_2)
  double gamma11 = 0.0;  // Cov(h1, h2)
  double gamma22 = 0.0;  // Cov(Lambda1, Lambda2)
  double gamma12 = 0.0;  // Cov(h1, Lambda2)
  double gamma21 = 0.0;  // Cov(Lambda1, h2)
  double cross = 0.0;    // Cov(I*_1, I*_2)
  double delta_var = 0.0;
  double rel_var = 0.0;
  double gamma4 = 0.0;
  double gamma5 = 0.0;
  double delta_cross = 0.0;  // Cov(Delta I*, Delta J*) for the 4x4 form
};

using RepBuilder = std::function<GriRepresentation(const DistributionModel&)>;

[[nodiscard]] JointCovariance temporal_joint_covariance(const BivariateFrame& frame, const GriRepresentation& rep1,
                                                        const GriRepresentation& rep2);
[[nodiscard]] JointCovariance temporal_joint_covariance(const BivariateFrame& frame, const GriRepresentation& rep);
[[nodiscard]] JointCovariance temporal_joint_covariance(const BivariateFrame& frame, const RepBuilder& build);

// Delta method on (I_1, I_2) with gradient (-I_2/I_1^2, 1/I_1). Throws ZeroBaseIndex.
[[nodiscard]] JointCovariance relative_variation_law(const JointCovariance& joint, double i1, double i2);
[[nodiscard]] JointCovariance relative_variation_law(const BivariateFrame& frame, const GriRepresentation& rep,
                                                     double i1, double i2);

[[nodiscard]] JointCovariance mutual_variation_covariance(const BivariateFrame& frame,
                                                          const GriRepresentation& repI1,
                                                          const GriRepresentation& repI2,
                                                          const GriRepresentation& repJ1,
                                                          const GriRepresentation& repJ2);
[[nodiscard]] JointCovariance mutual_variation_covariance(const BivariateFrame& frame, const GriRepresentation& repI,
                                                          const GriRepresentation& repJ);

// Cov(Delta_R I*, Delta_R J*) from the 4x4 matrix.
[[nodiscard]] double mutual_relative_covariance(const JointCovariance& joint, double i1, double i2, double j1,
                                                double j2);
[[nodiscard]] double mutual_relative_covariance(const BivariateFrame& frame, const GriRepresentation& repI,
                                                const GriRepresentation& repJ, double i1, double i2, double j1,
                                                double j2);

}  // namespace gri
