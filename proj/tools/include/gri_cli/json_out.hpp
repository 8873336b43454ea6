// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "gri/montecarlo.hpp"
#include "json.hpp"

namespace gri::cli {

using json = nlohmann::ordered_json;

// Every number the tool prints goes through %.12g, in json and text alike.
[[nodiscard]] std::string fmt12(double v);
// v rounded to 12 significant digits (null when not finite); dumps as fmt12(v).
[[nodiscard]] json num(double v);

[[nodiscard]] json to_json(const McReport& report);

// Two-space indent, trailing newline.
[[nodiscard]] std::string dump(const json& j);

}  // namespace gri::cli
