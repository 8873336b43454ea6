// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <vector>

#include "gri/error.hpp"
#include "gri/indices.hpp"

namespace gri {
namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// m_0 = 1, m_1, ..., m_top of F.
std::vector<double> raw_moments(const DistributionModel& F, int top) {
  std::vector<double> m(static_cast<std::size_t>(top) + 1, 1.0);
  for (int p = 1; p <= top; ++p) {
    m[static_cast<std::size_t>(p)] = F.integrate_score([p](double x) { return std::pow(x, p); });
    if (!std::isfinite(m[static_cast<std::size_t>(p)])) {
      throw Error(ErrorCode::NonFiniteMoment, "raw moment is not finite", p);
    }
  }
  return m;
}

double central_moment_of(const DistributionModel& F, int l) {
  const double m1 = F.integrate_score([](double x) { return x; });
  if (l == 1) return 0.0;
  const double v = F.integrate_score([m1, l](double x) { return std::pow(x - m1, l); });
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteMoment, "central moment is not finite", l);
  return v;
}

double sample_central_moment(const EmpiricalSample& sample, double mean, int l) {
  double acc = 0.0;
  for (double x : sample.values()) acc += std::pow(x - mean, l);
  return acc / static_cast<double>(sample.n());
}

}  // namespace

double central_moment_estimate(const EmpiricalSample& sample, int l) {
  if (l < 1) throw Error(ErrorCode::BadParams, "moment order must be >= 1", l);
  if (l == 1) return 0.0;
  const double mean = empirical_measure(sample, [](double x) { return x; });
  return sample_central_moment(sample, mean, l);
}

double moment_score(int l, double x, std::span<const double> m) {
  const double m1 = m[1];
  double acc = std::pow(x, l);
  for (int p = 0; p < l; ++p) {
    const double sign = ((l - p) % 2 == 0) ? 1.0 : -1.0;
    const double hp = std::pow(x, p);
    const double term = std::pow(m1, l - p) * hp + (l - p) * std::pow(m1, l - p - 1) * m[static_cast<std::size_t>(p)] * x;
    acc += binomial(l, p) * sign * term;
  }
  return acc;
}

GriRepresentation moment_representation(const DistributionModel& F, int l) {
  if (l < 1) throw Error(ErrorCode::BadParams, "moment order must be >= 1", l);
  auto m = raw_moments(F, l);
  GriRepresentation rep;
  rep.h = [l, m = std::move(m)](double x) { return moment_score(l, x, m); };
  rep.value = [l](const DistributionModel& G) { return central_moment_of(G, l); };
  return rep;
}

double normalized_moment_estimate(const EmpiricalSample& sample, int p, MomentKind kind) {
  if (p < 2) throw Error(ErrorCode::BadParams, "normalized moment order must be >= 2", p);
  const double mean = empirical_measure(sample, [](double x) { return x; });
  const double var = sample_central_moment(sample, mean, 2);
  if (!(var > 0.0)) throw Error(ErrorCode::ZeroVariance, "sample variance is zero");
  const int top = kind == MomentKind::Odd ? 2 * p - 1 : 2 * p;
  return sample_central_moment(sample, mean, top) / std::pow(var, 0.5 * top);
}

GriRepresentation normalized_moment_representation(const DistributionModel& F, int p, MomentKind kind) {
  if (p < 2) throw Error(ErrorCode::BadParams, "normalized moment order must be >= 2", p);
  const int top = kind == MomentKind::Odd ? 2 * p - 1 : 2 * p;
  auto m = raw_moments(F, top);
  const double var = central_moment_of(F, 2);
  if (!(var > 0.0)) throw Error(ErrorCode::ZeroVariance, "variance of F is zero");
  const double mu_top = central_moment_of(F, top);
  const double sigma = std::sqrt(var);
  // B(p) and C(p) share the shape s^-top (A(top) - (top/2) s^-2 mu_top A(2)).
  const double scale = std::pow(sigma, -top);
  const double coef = 0.5 * top / var * mu_top;
  GriRepresentation rep;
  rep.h = [m = std::move(m), top, scale, coef](double x) {
    return scale * (moment_score(top, x, m) - coef * moment_score(2, x, m));
  };
  rep.value = [top](const DistributionModel& G) {
    const double v = central_moment_of(G, 2);
    if (!(v > 0.0)) throw Error(ErrorCode::ZeroVariance, "variance is zero");
    return central_moment_of(G, top) / std::pow(v, 0.5 * top);
  };
  return rep;
}

}  // namespace gri
