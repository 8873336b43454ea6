// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

namespace gri::cli {

// Exit codes: 0 ok, 1 input error, 2 usage error, 3 acceptance band failed.
int run_app(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gri::cli
