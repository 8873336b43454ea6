// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <span>

#include "gri/quadrature.hpp"

namespace gri::detail {

// Grid whose empirical panels use enough Gauss points to integrate a polynomial in s of
// the given degree exactly.
inline QuantileGrid exact_grid(const DistributionModel& F, std::span<const double> kinks, int degree) {
  if (!F.is_empirical()) return QuantileGrid(F, kinks);
  const auto edges = F.panel_edges();
  const int order = std::clamp((degree + 2) / 2, 2, 64);
  return QuantileGrid(F, edges, order);
}

inline double poverty_gap(double x, double z) { return x <= z ? (z - x) / z : 0.0; }

}  // namespace gri::detail
