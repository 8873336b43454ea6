// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/representation.hpp"

#include <algorithm>
#include <cmath>

#include "gri/error.hpp"
#include "gri/normal.hpp"

namespace gri {
namespace {

double checked(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteIntegral, what);
  return v;
}

}  // namespace

std::vector<double> merge_kinks(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<double> InfluenceValues::total() const {
  std::vector<double> out(h.size());
  for (std::size_t k = 0; k < h.size(); ++k) out[k] = h[k] + lambda[k];
  return out;
}

InfluenceValues influence_values(const DistributionModel& F, const GriRepresentation& rep, const QuantileGrid& grid,
                                 std::span<const double> kinks) {
  InfluenceValues out;
  out.h = rep.h ? grid.evaluate(rep.h) : std::vector<double>(grid.size(), 0.0);
  if (rep.q) {
    out.lambda = TailIntegral(F, rep.q, kinks).at(grid.u());
  } else {
    out.lambda.assign(grid.size(), 0.0);
  }
  return out;
}

double score_covariance(const DistributionModel& F, const ScoreFunction& f, const ScoreFunction& g,
                        std::span<const double> kinks) {
  const QuantileGrid grid(F, kinks);
  return checked(weighted_covariance(grid.weights(), grid.evaluate(f), grid.evaluate(g)), "score covariance");
}

double indicator_cov_closed_form(double s, double t) {
  if (!(s > 0.0 && s < 1.0)) throw Error(ErrorCode::OutOfRange, "s must lie in (0, 1)", s);
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::OutOfRange, "t must lie in (0, 1)", t);
  return std::min(s, t) - s * t;
}

double beta_cross_cov(const DistributionModel& F, const ScoreFunction& h, const ScoreFunction& q,
                      std::span<const double> kinks) {
  if (!q) return 0.0;
  const QuantileGrid grid(F, kinks);
  const auto hv = grid.evaluate(h);
  const auto lam = TailIntegral(F, q, kinks).at(grid.u());
  return checked(weighted_covariance(grid.weights(), hv, lam), "beta cross covariance");
}

double beta_beta_cov(const DistributionModel& F, const ScoreFunction& q1, const ScoreFunction& q2,
                     std::span<const double> kinks) {
  if (!q1 || !q2) return 0.0;
  const QuantileGrid grid(F, kinks);
  const auto l1 = TailIntegral(F, q1, kinks).at(grid.u());
  const auto l2 = TailIntegral(F, q2, kinks).at(grid.u());
  return checked(weighted_covariance(grid.weights(), l1, l2), "beta covariance");
}

CovarianceEstimate index_variance(const DistributionModel& F, const GriRepresentation& rep) {
  const QuantileGrid grid(F, rep.kinks);
  const auto iv = influence_values(F, rep, grid, rep.kinks);
  CovarianceEstimate out;
  out.gamma1 = checked(weighted_covariance(grid.weights(), iv.h, iv.h), "gamma1");
  out.gamma2 = checked(weighted_covariance(grid.weights(), iv.lambda, iv.lambda), "gamma2");
  out.gamma3 = checked(weighted_covariance(grid.weights(), iv.h, iv.lambda), "gamma3");
  out.total = out.gamma1 + out.gamma2 + 2.0 * out.gamma3;
  if (out.total < -1e-9) throw Error(ErrorCode::NegativeVariance, "asymptotic variance is negative", out.total);
  if (out.total < 0.0) out.total = 0.0;
  return out;
}

double index_cross_covariance(const DistributionModel& F, const GriRepresentation& repI,
                              const GriRepresentation& repJ) {
  const auto kinks = merge_kinks(repI.kinks, repJ.kinks);
  const QuantileGrid grid(F, kinks);
  const auto a = influence_values(F, repI, grid, kinks).total();
  const auto b = influence_values(F, repJ, grid, kinks).total();
  return checked(weighted_covariance(grid.weights(), a, b), "cross covariance");
}

Interval confidence_interval(double estimate, double variance, std::size_t n, double level) {
  if (!(level > 0.0 && level < 1.0)) throw Error(ErrorCode::BadLevel, "level must lie in (0, 1)", level);
  if (!(variance >= 0.0)) throw Error(ErrorCode::NegativeVariance, "variance must be nonnegative", variance);
  if (n == 0) throw Error(ErrorCode::BadParams, "n must be positive");
  const double z = normal_quantile(0.5 * (1.0 + level));
  const double half = z * std::sqrt(variance / static_cast<double>(n));
  return {estimate - half, estimate + half};
}

GriRepresentation compose_ratio(const DistributionModel& F, const GriRepresentation& top,
                                const GriRepresentation& bottom) {
  const double a = top.value(F);
  const double b = bottom.value(F);
  if (b == 0.0 || !std::isfinite(b)) throw Error(ErrorCode::ZeroDenominator, "ratio denominator is zero", b);
  const double c1 = 1.0 / b;
  const double c2 = a / (b * b);
  GriRepresentation out;
  auto hl = top.h;
  auto hh = bottom.h;
  out.h = [hl, hh, c1, c2](double x) { return (hl ? c1 * hl(x) : 0.0) - (hh ? c2 * hh(x) : 0.0); };
  if (top.q || bottom.q) {
    auto ql = top.q;
    auto qh = bottom.q;
    out.q = [ql, qh, c1, c2](double x) { return (ql ? c1 * ql(x) : 0.0) - (qh ? c2 * qh(x) : 0.0); };
  }
  auto vt = top.value;
  auto vb = bottom.value;
  out.value = [vt, vb](const DistributionModel& G) {
    const double den = vb(G);
    if (den == 0.0) throw Error(ErrorCode::ZeroDenominator, "ratio denominator is zero");
    return vt(G) / den;
  };
  out.kinks = merge_kinks(top.kinks, bottom.kinks);
  return out;
}

GriRepresentation mean_representation() {
  GriRepresentation rep;
  rep.h = [](double x) { return x; };
  rep.value = [](const DistributionModel& F) { return F.integrate_score([](double x) { return x; }); };
  return rep;
}

}  // namespace gri
