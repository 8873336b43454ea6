// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "gri/error.hpp"
#include "gri/indices.hpp"
#include "internal.hpp"

namespace gri {

using detail::poverty_gap;

namespace {

constexpr double kDiffStep = 1e-5;

Kernel2 partial_x(const GpiSpec& spec) {
  if (spec.dc_dx) return spec.dc_dx;
  auto c = spec.c;
  return [c](double x, double y) { return (c(x + kDiffStep, y) - c(x - kDiffStep, y)) / (2.0 * kDiffStep); };
}

Kernel2 partial_y(const Kernel2& given, const Kernel2& f) {
  if (given) return given;
  return [f](double x, double y) { return (f(x, y + kDiffStep) - f(x, y - kDiffStep)) / (2.0 * kDiffStep); };
}

Kernel2 partial_x_of(const Kernel2& given, const Kernel2& f) {
  if (given) return given;
  return [f](double x, double y) { return (f(x + kDiffStep, y) - f(x - kDiffStep, y)) / (2.0 * kDiffStep); };
}

double gamma_of(const GpiSpec& spec, double x) {
  const double z = spec.poverty_line;
  if (x > z) return 0.0;
  return spec.d ? spec.d(poverty_gap(x, z)) : poverty_gap(x, z);
}

GpiSpec base_spec(double z) {
  GpiSpec s;
  s.poverty_line = z;
  s.d = [](double t) { return t; };
  return s;
}

}  // namespace

GpiSpec GpiSpec::kakwani(double z, int k) {
  if (k < 1) throw Error(ErrorCode::BadParams, "k must be >= 1", k);
  GpiSpec s = base_spec(z);
  s.A = [](double q, double, double) { return q; };
  s.w = [k](double t) { return std::pow(t, k); };
  s.mu1 = 0.0;
  s.mu2 = 1.0;
  s.mu3 = 1.0;
  s.mu4 = 1.0;
  const double kk = k;
  s.c = [kk](double x, double y) { return (kk + 1.0) * std::pow(std::max(0.0, 1.0 - y / x), kk); };
  s.dc_dx = [kk](double x, double y) {
    return (kk + 1.0) * kk * std::pow(std::max(0.0, 1.0 - y / x), kk - 1.0) * y / (x * x);
  };
  s.dc_dy = [kk](double x, double y) {
    return -(kk + 1.0) * kk * std::pow(std::max(0.0, 1.0 - y / x), kk - 1.0) / x;
  };
  s.pi = [kk](double x, double y) { return (kk + 1.0) * std::pow(y, kk) / std::pow(x, kk + 1.0); };
  s.dpi_dx = [kk](double x, double y) { return -(kk + 1.0) * (kk + 1.0) * std::pow(y, kk) / std::pow(x, kk + 2.0); };
  s.dpi_dy = [kk](double x, double y) { return kk * (kk + 1.0) * std::pow(y, kk - 1.0) / std::pow(x, kk + 1.0); };
  return s;
}

GpiSpec GpiSpec::sen(double z) {
  GpiSpec s = kakwani(z, 1);
  s.w = [](double t) { return t; };
  return s;
}

GpiSpec GpiSpec::shorrocks(double z) {
  GpiSpec s = base_spec(z);
  s.A = [](double q, double n, double) { return q * (q + 1.0) / (2.0 * n); };
  s.w = [](double t) { return t; };
  s.mu1 = 2.0;
  s.mu2 = 0.0;
  s.mu3 = 2.0;
  s.mu4 = 1.0;
  s.c = [](double, double y) { return 2.0 * (1.0 - y); };
  s.dc_dx = [](double, double) { return 0.0; };
  s.dc_dy = [](double, double) { return -2.0; };
  s.pi = [](double x, double) { return 1.0 / x; };
  s.dpi_dx = [](double x, double) { return -1.0 / (x * x); };
  s.dpi_dy = [](double, double) { return 0.0; };
  return s;
}

GpiSpec GpiSpec::thon(double z) {
  GpiSpec s = shorrocks(z);
  s.A = [](double q, double n, double) { return q * (q + 1.0) / (n + 1.0); };
  s.mu1 = 1.0;
  s.mu2 = 0.0;
  s.mu3 = 1.0;
  s.mu4 = 1.0;
  return s;
}

GpiSpec GpiSpec::fgt(double z, double alpha) {
  if (!(alpha >= 0.0)) throw Error(ErrorCode::BadParams, "alpha must be >= 0", alpha);
  GpiSpec s = shorrocks(z);
  s.A = [](double q, double, double) { return q; };
  s.w = [](double) { return 1.0; };
  s.mu1 = s.mu2 = s.mu3 = s.mu4 = 0.0;
  s.d = [alpha](double t) { return std::pow(t, alpha); };
  s.c = [](double, double) { return 1.0; };
  s.dc_dy = [](double, double) { return 0.0; };
  return s;
}

double gpi_estimate(const EmpiricalSample& sample, const GpiSpec& spec) {
  const double z = spec.poverty_line;
  if (!(z > 0.0)) throw Error(ErrorCode::BadThreshold, "poverty line must be positive", z);
  const std::size_t q = sample.count_at_most(z);
  if (q == 0) return 0.0;
  const auto n = static_cast<double>(sample.n());
  const auto qd = static_cast<double>(q);
  double b = 0.0;
  for (std::size_t i = 1; i <= q; ++i) b += spec.w(static_cast<double>(i));
  if (b == 0.0 || !std::isfinite(b)) throw Error(ErrorCode::ZeroDenominator, "B(Q, n) is zero", b);
  double acc = 0.0;
  for (std::size_t j = 1; j <= q; ++j) {
    const double arg = spec.mu1 * n + spec.mu2 * qd - spec.mu3 * static_cast<double>(j) + spec.mu4;
    acc += spec.w(arg) * gamma_of(spec, sample[j - 1]);
  }
  return spec.A(qd, n, z) / (n * b) * acc;
}

GpiConstants gpi_constants(const DistributionModel& F, const GpiSpec& spec) {
  const double z = spec.poverty_line;
  if (!(z > 0.0)) throw Error(ErrorCode::BadThreshold, "poverty line must be positive", z);
  if (!spec.c || !spec.pi) throw Error(ErrorCode::BadParams, "GPI representation needs c and pi");
  const double fz = F.cdf(z);
  if (!(fz > 0.0 && fz < 1.0)) throw Error(ErrorCode::ThresholdOutsideSupport, "need 0 < F(Z) < 1", fz);
  const auto dcx = partial_x(spec);
  const auto dpx = partial_x_of(spec.dpi_dx, spec.pi);
  const double kinks[] = {z};
  const auto grid = detail::exact_grid(F, kinks, 15);
  auto u = grid.u();
  auto x = grid.x();
  auto w = grid.weights();
  GpiConstants out;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (x[i] > z) continue;
    const double g = gamma_of(spec, x[i]);
    out.H_c += w[i] * spec.c(fz, u[i]) * g;
    out.H_pi += w[i] * spec.pi(fz, u[i]);
    out.K_c += w[i] * dcx(fz, u[i]) * g;
    out.K_pi += w[i] * dpx(fz, u[i]);
  }
  if (out.H_pi == 0.0) throw Error(ErrorCode::ZeroHpi, "H_pi vanishes");
  out.J = out.H_c / out.H_pi;
  out.K = out.K_c / out.H_pi - out.H_c * out.K_pi / (out.H_pi * out.H_pi);
  for (double v : {out.H_c, out.H_pi, out.J, out.K_c, out.K_pi, out.K}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteConstant, "GPI constant is not finite", v);
  }
  return out;
}

GriRepresentation gpi_representation(const DistributionModel& F, const GpiSpec& spec) {
  const GpiConstants k = gpi_constants(F, spec);
  const double z = spec.poverty_line;
  const double fz = F.cdf(z);
  const auto dcy = partial_y(spec.dc_dy, spec.c);
  const auto dpy = partial_y(spec.dpi_dy, spec.pi);
  const double inv = 1.0 / k.H_pi;
  const double ratio = k.H_c / (k.H_pi * k.H_pi);
  GriRepresentation rep;
  rep.h = [F, spec, fz, inv, ratio, K = k.K, z](double y) {
    if (y > z) return 0.0;
    const double s = F.cdf(y);
    return inv * spec.c(fz, s) * gamma_of(spec, y) - ratio * spec.pi(fz, s) + K;
  };
  rep.q = [F, spec, fz, inv, ratio, dcy, dpy, z](double y) {
    if (y > z) return 0.0;
    const double s = F.cdf(y);
    return inv * dcy(fz, s) * gamma_of(spec, y) - ratio * dpy(fz, s);
  };
  rep.value = [spec](const DistributionModel& G) { return gpi_constants(G, spec).J; };
  rep.kinks = {z};
  return rep;
}

}  // namespace gri
