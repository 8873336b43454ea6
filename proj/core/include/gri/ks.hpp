// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <span>

namespace gri {

struct KsResult {
  double statistic = 0.0;
  double pvalue = 1.0;
};

// Asymptotic Kolmogorov survival function P(K > lambda).
[[nodiscard]] double kolmogorov_survival(double lambda);

// One-sample test of `values` against a continuous cdf; the p-value uses sqrt(n) D.
[[nodiscard]] KsResult ks_test(std::span<const double> values, const std::function<double(double)>& cdf);

}  // namespace gri
