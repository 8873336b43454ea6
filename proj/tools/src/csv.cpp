// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri_cli/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>

#include "gri/error.hpp"

namespace gri::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::optional<double> parse_number(std::string_view field) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  if (field.empty()) return std::nullopt;
  double v = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, v, std::chars_format::general);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

CsvTable read_csv(std::istream& in, std::size_t columns, std::vector<std::size_t> numeric_columns) {
  CsvTable table;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (fields.size() != columns) {
      throw Error(ErrorCode::ColumnCountMismatch,
                  "line " + std::to_string(lineno) + ": expected " + std::to_string(columns) + " column(s), got " +
                      std::to_string(fields.size()),
                  static_cast<double>(lineno));
    }
    if (first) {
      first = false;
      const bool header = std::any_of(numeric_columns.begin(), numeric_columns.end(),
                                      [&](std::size_t c) { return !parse_number(fields[c]); });
      if (header) {
        table.header = std::move(fields);
        continue;
      }
    }
    table.rows.push_back(std::move(fields));
    table.lines.push_back(lineno);
  }
  if (table.rows.empty()) throw Error(ErrorCode::EmptyInput, "no data rows");
  return table;
}

std::vector<double> numeric_column(const CsvTable& table, std::size_t col) {
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto v = parse_number(table.rows[r][col]);
    if (!v) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(table.lines[r]) + ": not a number: '" + table.rows[r][col] + "'",
                  static_cast<double>(table.lines[r]));
    }
    out.push_back(*v);
  }
  return out;
}

GroupColumn group_column(const CsvTable& table, std::size_t col) {
  GroupColumn g;
  bool integral = true;
  std::vector<std::size_t> parsed;
  for (const auto& row : table.rows) {
    const auto& f = row[col];
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || v == 0) {
      integral = false;
      break;
    }
    parsed.push_back(v);
  }
  if (integral) {
    const std::size_t K = *std::max_element(parsed.begin(), parsed.end());
    g.ids = std::move(parsed);
    for (std::size_t k = 1; k <= K; ++k) g.labels.push_back(std::to_string(k));
    return g;
  }
  std::map<std::string, std::size_t> seen;
  g.ids.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row[col].empty()) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(table.lines[r]) + ": empty group label",
                  static_cast<double>(table.lines[r]));
    }
    const auto [it, fresh] = seen.try_emplace(row[col], seen.size() + 1);
    if (fresh) g.labels.push_back(row[col]);
    g.ids.push_back(it->second);
  }
  return g;
}

}  // namespace gri::cli
