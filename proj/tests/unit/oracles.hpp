// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
// Independent reference computations for the tests. Nothing here calls into the
// library's quadrature or representation code.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline std::vector<double> sorted(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Composite Simpson on [a, b] with m (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int m = 20000) {
  if (m % 2) ++m;
  const double h = (b - a) / m;
  double acc = f(a) + f(b);
  for (int i = 1; i < m; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

// Sen by its textbook finite-n display.
inline double sen(std::vector<double> x, double z) {
  x = sorted(std::move(x));
  const double n = static_cast<double>(x.size());
  int q = 0;
  for (double v : x) q += v <= z;
  if (q == 0) return 0.0;
  double acc = 0.0;
  for (int j = 1; j <= q; ++j) acc += (q - j + 1) * (z - x[j - 1]) / z;
  return 2.0 / (n * (q + 1)) * acc;
}

inline double kakwani(std::vector<double> x, double z, int k) {
  x = sorted(std::move(x));
  const double n = static_cast<double>(x.size());
  int q = 0;
  for (double v : x) q += v <= z;
  if (q == 0) return 0.0;
  double phi = 0.0;
  for (int i = 1; i <= q; ++i) phi += std::pow(i, k);
  double acc = 0.0;
  for (int j = 1; j <= q; ++j) acc += std::pow(q - j + 1, k) * (z - x[j - 1]) / z;
  return q / (n * phi) * acc;
}

inline double shorrocks(std::vector<double> x, double z) {
  x = sorted(std::move(x));
  const double n = static_cast<double>(x.size());
  double acc = 0.0;
  for (std::size_t j = 1; j <= x.size(); ++j)
    if (x[j - 1] <= z) acc += (2.0 * n - 2.0 * j + 1.0) * (z - x[j - 1]) / z;
  return acc / (n * n);
}

inline double thon(std::vector<double> x, double z) {
  x = sorted(std::move(x));
  const double n = static_cast<double>(x.size());
  double acc = 0.0;
  for (std::size_t j = 1; j <= x.size(); ++j)
    if (x[j - 1] <= z) acc += (n - j + 1.0) * (z - x[j - 1]) / z;
  return 2.0 / (n * (n + 1.0)) * acc;
}

inline double fgt(const std::vector<double>& x, double z, double alpha) {
  double acc = 0.0;
  for (double v : x)
    if (v <= z) acc += alpha == 0.0 ? 1.0 : std::pow((z - v) / z, alpha);
  return acc / static_cast<double>(x.size());
}

// Takayama rank form with max-ranks counted by brute force.
inline double takayama(const std::vector<double>& x, double z, const std::function<double(double)>& d) {
  const double n = static_cast<double>(x.size());
  double acc = 0.0;
  for (double v : x) {
    if (v > z) continue;
    double below = 0.0;
    for (double w : x) below += w <= v;
    acc += (1.0 - below / n + 1.0 / n) * d(v);
  }
  return acc / n;
}

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline double variance(const std::vector<double>& v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

inline double central_moment(const std::vector<double>& v, int l) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += std::pow(x - m, l);
  return s / static_cast<double>(v.size());
}

inline std::vector<double> random_sample(std::mt19937_64& g, std::size_t n, double lo = 0.0, double hi = 4.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = u(g);
  return v;
}

}  // namespace oracle
