// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace gri {

[[nodiscard]] double normal_pdf(double x) noexcept;
[[nodiscard]] double normal_cdf(double x) noexcept;

// Wichura's AS241 (PPND16) rational approximation; relative accuracy about 1e-16.
// Throws OutOfRange unless 0 < p < 1.
[[nodiscard]] double normal_quantile(double p);

// P(X <= h, Y <= k) for a standard bivariate normal with correlation rho in (-1, 1).
[[nodiscard]] double bivariate_normal_cdf(double h, double k, double rho);

}  // namespace gri
