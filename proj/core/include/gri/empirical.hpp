// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace gri {

using ScoreFunction = std::function<double(double)>;

// Sorted observations plus the permutation back to input order. Copies share storage.
class EmpiricalSample {
 public:
  // Throws EmptySample, or NonFiniteValue with the 0-based input index.
  static EmpiricalSample build(std::span<const double> values);

  [[nodiscard]] std::span<const double> values() const noexcept { return data_->sorted; }
  [[nodiscard]] std::size_t n() const noexcept { return data_->sorted.size(); }
  [[nodiscard]] double operator[](std::size_t k) const noexcept { return data_->sorted[k]; }

  // original_order()[k] is the input position of the k-th order statistic.
  [[nodiscard]] std::span<const std::size_t> original_order() const noexcept { return data_->order; }

  // The input sequence, reconstructed from the permutation.
  [[nodiscard]] std::vector<double> input_values() const;

  [[nodiscard]] double min() const noexcept { return data_->sorted.front(); }
  [[nodiscard]] double max() const noexcept { return data_->sorted.back(); }

  // #{j : X_j <= x}.
  [[nodiscard]] std::size_t count_at_most(double x) const noexcept;

 private:
  struct Data {
    std::vector<double> sorted;
    std::vector<std::size_t> order;
  };
  explicit EmpiricalSample(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

[[nodiscard]] double ecdf(const EmpiricalSample& sample, double x) noexcept;

// X_{j,n} with j the smallest integer such that s <= j/n. Throws OutOfRange unless 0 < s <= 1.
[[nodiscard]] double equantile(const EmpiricalSample& sample, double s);

// Max-rank convention: R_j = n * ecdf(X_j), listed in input order.
[[nodiscard]] std::vector<std::size_t> ranks(const EmpiricalSample& sample);

// (1/n) sum f(X_j). Throws NonFiniteScore.
[[nodiscard]] double empirical_measure(const EmpiricalSample& sample, const ScoreFunction& f);

// sqrt(n) (P_n f - mean_f).
[[nodiscard]] double fep(const EmpiricalSample& sample, const ScoreFunction& f, double mean_f);

}  // namespace gri
