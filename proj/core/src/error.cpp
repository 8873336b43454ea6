// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri/error.hpp"

namespace gri {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NonFiniteScore: return "NonFiniteScore";
    case ErrorCode::NonFiniteIntegral: return "NonFiniteIntegral";
    case ErrorCode::NegativeVariance: return "NegativeVariance";
    case ErrorCode::BadLevel: return "BadLevel";
    case ErrorCode::BadThreshold: return "BadThreshold";
    case ErrorCode::ZeroMean: return "ZeroMean";
    case ErrorCode::ThresholdOutsideSupport: return "ThresholdOutsideSupport";
    case ErrorCode::NonFiniteConstant: return "NonFiniteConstant";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::ZeroHpi: return "ZeroHpi";
    case ErrorCode::NonFiniteMoment: return "NonFiniteMoment";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::TooFewPairs: return "TooFewPairs";
    case ErrorCode::ZeroBaseIndex: return "ZeroBaseIndex";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::UnknownExperiment: return "UnknownExperiment";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::ColumnCountMismatch: return "ColumnCountMismatch";
  }
  return "Unknown";
}

namespace {
std::string compose(ErrorCode code, const std::string& message) {
  std::string out(to_string(code));
  if (!message.empty()) {
    out += ": ";
    out += message;
  }
  return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(compose(code, message)), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, double detail)
    : std::runtime_error(compose(code, message)), code_(code), detail_(detail) {}

}  // namespace gri
