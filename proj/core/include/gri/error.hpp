// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gri {

enum class ErrorCode {
  EmptySample,
  NonFiniteValue,
  OutOfRange,
  NonFiniteScore,
  NonFiniteIntegral,
  NegativeVariance,
  BadLevel,
  BadThreshold,
  ZeroMean,
  ThresholdOutsideSupport,
  NonFiniteConstant,
  ZeroDenominator,
  ZeroHpi,
  NonFiniteMoment,
  ZeroVariance,
  TooFewPairs,
  ZeroBaseIndex,
  BadWeights,
  BadParams,
  UnknownExperiment,
  ParseError,
  EmptyInput,
  ColumnCountMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library. `detail()` carries the offending
// index, line number or value when the operation has one to report.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, double detail);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::optional<double> detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<double> detail_;
};

}  // namespace gri
