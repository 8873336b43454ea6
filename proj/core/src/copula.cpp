// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>

#include "gri/error.hpp"
#include "gri/normal.hpp"
#include "gri/temporal.hpp"

namespace gri {

CopulaModel CopulaModel::independence() { return CopulaModel(); }

CopulaModel CopulaModel::comonotone() {
  CopulaModel c;
  c.kind_ = Kind::Comonotone;
  return c;
}

CopulaModel CopulaModel::gaussian(double rho) {
  if (!(rho > -1.0 && rho < 1.0)) throw Error(ErrorCode::BadParams, "Gaussian copula needs -1 < rho < 1", rho);
  CopulaModel c;
  c.kind_ = Kind::Gaussian;
  c.rho_ = rho;
  return c;
}

double CopulaModel::eval(double u, double v) const {
  u = std::clamp(u, 0.0, 1.0);
  v = std::clamp(v, 0.0, 1.0);
  if (u == 0.0 || v == 0.0) return 0.0;
  switch (kind_) {
    case Kind::Independence:
      return u * v;
    case Kind::Comonotone:
      return std::min(u, v);
    case Kind::Gaussian:
      if (u == 1.0) return v;
      if (v == 1.0) return u;
      return bivariate_normal_cdf(normal_quantile(u), normal_quantile(v), rho_);
    case Kind::Empirical: {
      const auto n = static_cast<double>(ranks_->rx.size());
      std::size_t count = 0;
      for (std::size_t j = 0; j < ranks_->rx.size(); ++j) {
        if (static_cast<double>(ranks_->rx[j]) / n <= u && static_cast<double>(ranks_->ry[j]) / n <= v) ++count;
      }
      return static_cast<double>(count) / n;
    }
  }
  return 0.0;
}

std::size_t CopulaModel::size() const noexcept { return ranks_ ? ranks_->rx.size() : 0; }

const CopulaModel::Ranks& CopulaModel::empirical_ranks() const {
  if (!ranks_) throw Error(ErrorCode::BadParams, "copula is not empirical");
  return *ranks_;
}

std::span<const std::size_t> CopulaModel::rank_x() const { return empirical_ranks().rx; }
std::span<const std::size_t> CopulaModel::rank_y() const { return empirical_ranks().ry; }
std::span<const std::size_t> CopulaModel::position_x() const { return empirical_ranks().px; }
std::span<const std::size_t> CopulaModel::position_y() const { return empirical_ranks().py; }

namespace {

std::vector<std::size_t> positions(const EmpiricalSample& s) {
  std::vector<std::size_t> out(s.n());
  auto order = s.original_order();
  for (std::size_t k = 0; k < s.n(); ++k) out[order[k]] = k;
  return out;
}

}  // namespace

CopulaModel empirical_copula(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorCode::ColumnCountMismatch, "pair columns differ in length");
  if (x.size() < 2) throw Error(ErrorCode::TooFewPairs, "need at least two pairs", static_cast<double>(x.size()));
  const auto sx = EmpiricalSample::build(x);
  const auto sy = EmpiricalSample::build(y);
  auto r = std::make_shared<CopulaModel::Ranks>();
  r->rx = ranks(sx);
  r->ry = ranks(sy);
  r->px = positions(sx);
  r->py = positions(sy);
  CopulaModel c;
  c.kind_ = CopulaModel::Kind::Empirical;
  c.ranks_ = std::move(r);
  return c;
}

CopulaModel empirical_copula(std::span<const std::pair<double, double>> pairs) {
  std::vector<double> x;
  std::vector<double> y;
  x.reserve(pairs.size());
  y.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    x.push_back(a);
    y.push_back(b);
  }
  return empirical_copula(x, y);
}

BivariateFrame BivariateFrame::from_pairs(std::span<const double> x, std::span<const double> y) {
  auto copula = empirical_copula(x, y);
  return BivariateFrame{DistributionModel::empirical(EmpiricalSample::build(x)),
                        DistributionModel::empirical(EmpiricalSample::build(y)), std::move(copula)};
}

double SymMatrix::bilinear(std::span<const double> v, std::span<const double> w) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) acc += v[i] * a[i * dim + j] * w[j];
  }
  return acc;
}

}  // namespace gri
