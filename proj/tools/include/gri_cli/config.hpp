// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gri/families.hpp"
#include "gri/indices.hpp"

namespace gri::cli {

// Bad flags or flag combinations; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

// Unset optionals take the command's (or the experiment's) defaults.
struct RunConfig {
  std::string command;  // estimate | compare | decompose | validate
  std::optional<std::string> index;
  std::optional<double> alpha;
  std::optional<int> k;
  std::optional<int> order;
  std::optional<double> poverty_line;
  std::optional<double> level;
  int grid = 2048;
  std::optional<std::uint64_t> seed;
  Format format = Format::Text;
  std::string experiment;
  std::string input;
  std::string input2;
  unsigned threads = 1;
  std::optional<std::size_t> n;
  std::optional<std::size_t> replicates;
  std::vector<std::string> families;
  std::vector<double> weights;
};

// fgt, sen, kakwani, shorrocks, thon, takayama, takayama-ratio, central-moment,
// odd-moment, even-moment. Poverty indices need --poverty-line.
[[nodiscard]] NamedIndex make_index(const RunConfig& config);

// "uniform(0,1)", "exponential(2)", "lognormal(0,1)", "pareto(1,3)", "normal(0,1)".
[[nodiscard]] FamilyPtr parse_family(std::string_view text);

[[nodiscard]] double resolved_level(const RunConfig& config);

}  // namespace gri::cli
