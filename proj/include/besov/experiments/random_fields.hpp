// Copyright 2026 The besov-euler Authors
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

#pragma once

#include <cstdint>

#include "besov/field.hpp"

namespace besov::experiments {

// Seeded divergence-free, mean-zero field with modes |xi| <= radius. The
// field is defined by its lattice modes, so the same seed gives the same
// function on every grid with the same L. Unit L^2 norm.
VectorField random_solenoidal_field(const Grid& grid, std::uint64_t seed, double radius);

// Seeded scalar mixture of modes |xi| <= radius with unit L^2 norm.
ScalarField random_scalar_field(const Grid& grid, std::uint64_t seed, double radius);

}  // namespace besov::experiments
