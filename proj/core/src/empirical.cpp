// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gri/error.hpp"

namespace gri {

EmpiricalSample EmpiricalSample::build(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::EmptySample, "sample has no observations");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::NonFiniteValue, "observation " + std::to_string(i) + " is not finite",
                  static_cast<double>(i));
    }
  }
  auto data = std::make_shared<Data>();
  data->order.resize(values.size());
  std::iota(data->order.begin(), data->order.end(), std::size_t{0});
  std::stable_sort(data->order.begin(), data->order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  data->sorted.reserve(values.size());
  for (std::size_t idx : data->order) data->sorted.push_back(values[idx]);
  return EmpiricalSample(std::move(data));
}

std::vector<double> EmpiricalSample::input_values() const {
  std::vector<double> out(n());
  for (std::size_t k = 0; k < n(); ++k) out[data_->order[k]] = data_->sorted[k];
  return out;
}

std::size_t EmpiricalSample::count_at_most(double x) const noexcept {
  const auto& v = data_->sorted;
  return static_cast<std::size_t>(std::upper_bound(v.begin(), v.end(), x) - v.begin());
}

double ecdf(const EmpiricalSample& sample, double x) noexcept {
  return static_cast<double>(sample.count_at_most(x)) / static_cast<double>(sample.n());
}

double equantile(const EmpiricalSample& sample, double s) {
  if (!(s > 0.0 && s <= 1.0)) throw Error(ErrorCode::OutOfRange, "empirical quantile needs 0 < s <= 1", s);
  const auto n = static_cast<double>(sample.n());
  auto j = static_cast<std::size_t>(std::ceil(s * n));
  // Guard against s*n landing one ulp past an integer.
  if (j > 1 && s <= static_cast<double>(j - 1) / n) --j;
  j = std::clamp<std::size_t>(j, 1, sample.n());
  return sample[j - 1];
}

std::vector<std::size_t> ranks(const EmpiricalSample& sample) {
  const std::size_t n = sample.n();
  std::vector<std::size_t> out(n);
  auto order = sample.original_order();
  std::size_t k = 0;
  while (k < n) {
    std::size_t end = k + 1;
    while (end < n && sample[end] == sample[k]) ++end;
    for (std::size_t t = k; t < end; ++t) out[order[t]] = end;
    k = end;
  }
  return out;
}

double empirical_measure(const EmpiricalSample& sample, const ScoreFunction& f) {
  double acc = 0.0;
  for (std::size_t k = 0; k < sample.n(); ++k) {
    const double v = f(sample[k]);
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteScore, "score is not finite at a sample point", sample[k]);
    acc += v;
  }
  return acc / static_cast<double>(sample.n());
}

double fep(const EmpiricalSample& sample, const ScoreFunction& f, double mean_f) {
  return std::sqrt(static_cast<double>(sample.n())) * (empirical_measure(sample, f) - mean_f);
}

}  // namespace gri
