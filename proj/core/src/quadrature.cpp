// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "gri/error.hpp"
#include "gri/gauss_legendre.hpp"

namespace gri {

QuantileGrid::QuantileGrid(const DistributionModel& F, std::span<const double> kinks) {
  const auto edges = F.panel_edges(kinks);
  fill(F, edges, F.panel_order());
}

QuantileGrid::QuantileGrid(const DistributionModel& F, std::span<const double> edges, int order) {
  fill(F, edges, order);
}

QuantileGrid QuantileGrid::from_points(const DistributionModel& F, std::vector<double> u, std::vector<double> w) {
  QuantileGrid g;
  g.x_.reserve(u.size());
  for (double s : u) g.x_.push_back(F.quantile(s));
  g.u_ = std::move(u);
  g.w_ = std::move(w);
  return g;
}

void QuantileGrid::fill(const DistributionModel& F, std::span<const double> edges, int order) {
  const GaussRule& rule = gauss_legendre(order);
  const std::size_t panels = edges.size() - 1;
  u_.reserve(panels * rule.nodes.size());
  w_.reserve(panels * rule.nodes.size());
  x_.reserve(panels * rule.nodes.size());
  const bool step = F.is_empirical();
  for (std::size_t p = 0; p < panels; ++p) {
    const double a = edges[p];
    const double b = edges[p + 1];
    if (!(b > a)) continue;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    // The quantile is constant on an empirical step; evaluate it at the panel middle
    // so rounding at the step edges cannot pick the neighbour.
    const double step_x = step ? F.quantile(mid) : 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = mid + half * rule.nodes[i];
      u_.push_back(u);
      w_.push_back(half * rule.weights[i]);
      x_.push_back(step ? step_x : F.quantile(u));
    }
  }
}

std::vector<double> QuantileGrid::evaluate(const ScoreFunction& f) const {
  std::vector<double> out(x_.size());
  for (std::size_t k = 0; k < x_.size(); ++k) {
    out[k] = f(x_[k]);
    if (!std::isfinite(out[k])) throw Error(ErrorCode::NonFiniteIntegral, "score is not finite on the grid", x_[k]);
  }
  return out;
}

double QuantileGrid::integrate(const ScoreFunction& f) const {
  return weighted_mean(w_, evaluate(f));
}

TailIntegral::TailIntegral(const DistributionModel& F, const ScoreFunction& q, std::span<const double> kinks)
    : F_(F), q_(q) {
  if (!q_) {
    zero_ = true;
    return;
  }
  if (F_.is_empirical()) {
    const auto& s = F_.sample();
    const std::size_t n = s.n();
    ell_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      ell_[j] = q_(s[j]);
      if (!std::isfinite(ell_[j])) throw Error(ErrorCode::NonFiniteIntegral, "q is not finite at a sample point", s[j]);
    }
    suffix_.assign(n + 1, 0.0);
    for (std::size_t j = n; j-- > 0;) suffix_[j] = suffix_[j + 1] + ell_[j] / static_cast<double>(n);
    return;
  }
  edges_ = F_.panel_edges(kinks);
  order_ = F_.panel_order();
  const std::size_t panels = edges_.size() - 1;
  suffix_.assign(panels + 1, 0.0);
  auto ell = [&](double t) {
    const double v = q_(F_.quantile(t));
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteIntegral, "q is not finite on the grid", t);
    return v;
  };
  for (std::size_t p = panels; p-- > 0;) {
    suffix_[p] = suffix_[p + 1] + gauss_integrate(ell, edges_[p], edges_[p + 1], order_);
  }
}

double TailIntegral::operator()(double u) const {
  if (zero_) return 0.0;
  if (u <= 0.0) return suffix_.front();
  if (u >= 1.0) return 0.0;
  if (F_.is_empirical()) {
    const std::size_t n = ell_.size();
    const auto nd = static_cast<double>(n);
    auto j = static_cast<std::size_t>(std::ceil(u * nd));
    j = std::clamp<std::size_t>(j, 1, n);
    // Lambda is continuous and linear on each step, so an off-by-one panel from
    // rounding at an edge gives the same value.
    return (static_cast<double>(j) / nd - u) * ell_[j - 1] + suffix_[j];
  }
  const auto it = std::upper_bound(edges_.begin(), edges_.end(), u);
  const auto p = static_cast<std::size_t>(it - edges_.begin()) - 1;
  const double b = edges_[p + 1];
  // a sliver of a panel next to 1 can round its nodes onto the endpoint
  auto ell = [&](double t) { return q_(F_.quantile(std::clamp(t, 0x1.0p-1074, 1.0 - 0x1.0p-53))); };
  return suffix_[p + 1] + gauss_integrate(ell, u, b, order_);
}

std::vector<double> TailIntegral::at(std::span<const double> u) const {
  std::vector<double> out(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) out[k] = (*this)(u[k]);
  return out;
}

double TailIntegral::above(double x) const {
  if (zero_) return 0.0;
  if (F_.is_empirical()) {
    const auto v = F_.sample().values();
    const auto below = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    return suffix_[below];
  }
  return (*this)(F_.cdf(x));
}

double weighted_mean(std::span<const double> w, std::span<const double> a) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += w[k] * a[k];
  return acc;
}

double weighted_covariance(std::span<const double> w, std::span<const double> a, std::span<const double> b) {
  const double ma = weighted_mean(w, a);
  const double mb = weighted_mean(w, b);
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += w[k] * (a[k] - ma) * (b[k] - mb);
  return acc;
}

}  // namespace gri
