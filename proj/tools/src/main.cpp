// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "gri_cli/app.hpp"

int main(int argc, char** argv) { return gri::cli::run_app(argc, argv, std::cout, std::cerr); }
