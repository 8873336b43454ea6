// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gri_cli/config.hpp"
#include "gri_cli/json_out.hpp"

namespace gri::cli {

// Unreadable input file; exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandOutput {
  json report;
  std::vector<std::string> warnings;  // also stored in report["warnings"] when non-empty
  int exit_code = 0;                  // 3 when a validate band fails
};

[[nodiscard]] CommandOutput run_estimate(const RunConfig& config, std::istream& in);
// Two columns of `in`, or one column each from `in` and `*in2`.
[[nodiscard]] CommandOutput run_compare(const RunConfig& config, std::istream& in, std::istream* in2 = nullptr);
// value,group rows of `in`, or values from `in` and groups from `*in2`.
[[nodiscard]] CommandOutput run_decompose(const RunConfig& config, std::istream& in, std::istream* in2 = nullptr);
[[nodiscard]] CommandOutput run_validate(const RunConfig& config);

// Opens config.input / config.input2 ("-" is stdin) and dispatches on config.command.
[[nodiscard]] CommandOutput run_command(const RunConfig& config);

// One "key: value" line per scalar, nested keys joined with '.'; replicate lists are left
// to the json form.
[[nodiscard]] std::string render_text(const json& report);
[[nodiscard]] std::string render(const CommandOutput& out, Format format);

}  // namespace gri::cli
