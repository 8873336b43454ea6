// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gri::cli {

// Comma-separated rows with surrounding whitespace trimmed; blank lines are skipped.
struct CsvTable {
  std::vector<std::string> header;  // empty when the first row was data
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;  // 1-based source line of each row
};

// The first row is a header when any of its `numeric_columns` fields is not a number.
// Throws EmptyInput (no data rows), ColumnCountMismatch (row width != `columns`).
[[nodiscard]] CsvTable read_csv(std::istream& in, std::size_t columns, std::vector<std::size_t> numeric_columns);

// Full-field decimal parse; rejects trailing text and non-finite values.
[[nodiscard]] std::optional<double> parse_number(std::string_view field);

// Column `col` as numbers. Throws ParseError with the source line.
[[nodiscard]] std::vector<double> numeric_column(const CsvTable& table, std::size_t col);

struct GroupColumn {
  std::vector<std::size_t> ids;     // 1..K, input order
  std::vector<std::string> labels;  // labels[id - 1]
};

// Positive integer labels are used as group ids; anything else is numbered in
// first-seen order.
[[nodiscard]] GroupColumn group_column(const CsvTable& table, std::size_t col);

}  // namespace gri::cli
