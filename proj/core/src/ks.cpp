// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/ks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "gri/error.hpp"

namespace gri {

double kolmogorov_survival(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  if (lambda < 1.18) {
    // P(K <= l) = sqrt(2 pi)/l sum exp(-(2k-1)^2 pi^2 / (8 l^2)), converges fast for small l.
    const double c = -std::numbers::pi * std::numbers::pi / (8.0 * lambda * lambda);
    double acc = 0.0;
    for (int k = 1; k <= 8; ++k) {
      const double m = 2.0 * k - 1.0;
      acc += std::exp(c * m * m);
    }
    const double cdf = std::sqrt(2.0 * std::numbers::pi) / lambda * acc;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double acc = 0.0;
  for (int k = 1; k <= 12; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    acc += (k % 2 == 1 ? term : -term);
  }
  return std::clamp(2.0 * acc, 0.0, 1.0);
}

KsResult ks_test(std::span<const double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw Error(ErrorCode::EmptySample, "KS test needs observations");
  std::vector<double> v(values.begin(), values.end());
  std::sort(v.begin(), v.end());
  const auto n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max(d, std::max(static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n));
  }
  return {d, kolmogorov_survival(std::sqrt(n) * d)};
}

}  // namespace gri
