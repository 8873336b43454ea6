// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include "gri_cli/json_out.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace gri::cli {

std::string fmt12(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  // The shortest round-trip form of the parsed value is the 12-digit string itself.
  const double r = std::strtod(fmt12(v).c_str(), nullptr);
  return r == 0.0 ? json(0.0) : json(r);
}

json to_json(const McReport& r) {
  json values = json::array();
  for (const double v : r.replicate_values) values.push_back(num(v));
  json standardized = json::array();
  for (const double v : r.standardized) standardized.push_back(num(v));
  return json{{"experiment", r.experiment},
              {"master_seed", r.master_seed},
              {"n", r.n},
              {"R", r.R},
              {"level", num(r.level)},
              {"reference_value", num(r.reference_value)},
              {"reference_variance", num(r.reference_variance)},
              {"degenerate", r.degenerate},
              {"ks_stat", num(r.ks_stat)},
              {"ks_pvalue", num(r.ks_pvalue)},
              {"coverage", num(r.coverage)},
              {"replicate_values", std::move(values)},
              {"standardized", std::move(standardized)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gri::cli
