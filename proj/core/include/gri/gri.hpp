// Copyright 2026 The gri Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "gri/decomposability.hpp"
#include "gri/distribution.hpp"
#include "gri/empirical.hpp"
#include "gri/error.hpp"
#include "gri/families.hpp"
#include "gri/indices.hpp"
#include "gri/ks.hpp"
#include "gri/montecarlo.hpp"
#include "gri/representation.hpp"
#include "gri/rng.hpp"
#include "gri/temporal.hpp"
