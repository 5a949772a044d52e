// Copyright 2026 The qblockmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header for the whole toolkit.

#pragma once

#include "qbm/circuit.hpp"      // IWYU pragma: export
#include "qbm/decompose.hpp"    // IWYU pragma: export
#include "qbm/density.hpp"      // IWYU pragma: export
#include "qbm/encoding.hpp"     // IWYU pragma: export
#include "qbm/errors.hpp"       // IWYU pragma: export
#include "qbm/experiments.hpp"  // IWYU pragma: export
#include "qbm/gates.hpp"        // IWYU pragma: export
#include "qbm/image.hpp"        // IWYU pragma: export
#include "qbm/noise.hpp"        // IWYU pragma: export
#include "qbm/qft_arithmetic.hpp"  // IWYU pragma: export
#include "qbm/rng.hpp"          // IWYU pragma: export
#include "qbm/search.hpp"       // IWYU pragma: export
#include "qbm/statevector.hpp"  // IWYU pragma: export
#include "qbm/swap_distance.hpp"  // IWYU pragma: export
