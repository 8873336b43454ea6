// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/normal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gri/error.hpp"
#include "gri/gauss_legendre.hpp"

namespace gri {
namespace {

template <std::size_t N>
double horner(const double (&c)[N], double x) {
  double acc = c[N - 1];
  for (std::size_t i = N - 1; i-- > 0;) acc = acc * x + c[i];
  return acc;
}

constexpr double kA[] = {3.3871328727963666080e0, 1.3314166789178437745e2, 1.9715909503065514427e3,
                         1.3731693765509461125e4, 4.5921953931549871457e4, 6.7265770927008700853e4,
                         3.3430575583588128105e4, 2.5090809287301226727e3};
constexpr double kB[] = {1.0,
                         4.2313330701600911252e1,
                         6.8718700749205790830e2,
                         5.3941960214247511077e3,
                         2.1213794301586595867e4,
                         3.9307895800092710610e4,
                         2.8729085735721942674e4,
                         5.2264952788528545610e3};
constexpr double kC[] = {1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
                         3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
                         2.27238449892691845833e-2, 7.74545014278341407640e-4};
constexpr double kD[] = {1.0,
                         2.05319162663775882187e0,
                         1.67638483018380384940e0,
                         6.89767334985100004550e-1,
                         1.48103976427480074590e-1,
                         1.51986665636164571966e-2,
                         5.47593808499534494600e-4,
                         1.05075007164441684324e-9};
constexpr double kE[] = {6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
                         2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
                         2.71155556874348757815e-5, 2.01033439929228813265e-7};
constexpr double kF[] = {1.0,
                         5.99832206555887937690e-1,
                         1.36929880922735805310e-1,
                         1.48753612908506148525e-2,
                         7.86869131145613259100e-4,
                         1.84631831751005468180e-5,
                         1.42151175831644588870e-7,
                         2.04426310338993978564e-15};

}  // namespace

double normal_pdf(double x) noexcept {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(ErrorCode::OutOfRange, "normal quantile needs 0 < p < 1", p);
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(kA, r) / horner(kB, r);
  }
  double r = std::sqrt(-std::log(q < 0.0 ? p : 1.0 - p));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = horner(kC, r) / horner(kD, r);
  } else {
    r -= 5.0;
    value = horner(kE, r) / horner(kF, r);
  }
  return q < 0.0 ? -value : value;
}

double bivariate_normal_cdf(double h, double k, double rho) {
  if (!(rho > -1.0 && rho < 1.0)) throw Error(ErrorCode::OutOfRange, "correlation must lie in (-1, 1)", rho);
  if (std::isinf(h) || std::isinf(k)) {
    if (h == -INFINITY || k == -INFINITY) return 0.0;
    if (h == INFINITY) return normal_cdf(k);
    return normal_cdf(h);
  }
  // Sheppard: P = Phi(h)Phi(k) + (1/2pi) int_0^{asin rho} exp(-(h^2+k^2-2hk sin t)/(2cos^2 t)) dt.
  const double top = std::asin(rho);
  const double hk = h * k;
  const double ss = 0.5 * (h * h + k * k);
  auto integrand = [&](double t) {
    const double s = std::sin(t);
    const double c2 = 1.0 - s * s;
    return std::exp((hk * s - ss) / c2);
  };
  constexpr int kPanels = 8;
  double acc = 0.0;
  for (int i = 0; i < kPanels; ++i) {
    const double a = top * i / kPanels;
    const double b = top * (i + 1) / kPanels;
    acc += gauss_integrate(integrand, a, b, 20);
  }
  const double p = normal_cdf(h) * normal_cdf(k) + acc / (2.0 * std::numbers::pi);
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace gri
