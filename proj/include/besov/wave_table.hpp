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

#include <memory>
#include <vector>

#include "besov/aligned.hpp"
#include "besov/grid.hpp"

namespace besov {

// Per-grid multiplier tables over the half spectral layout. Shared, immutable,
// built once per distinct grid.
struct WaveTable {
  Grid grid;
  // Derivative wavenumbers per axis. The Nyquist index -N/2 carries 0 so odd
  // derivatives of real fields stay real.
  std::vector<RealBuffer> derivative;
  // 1 / sum_a derivative[a]^2, and 0 where that sum vanishes (the mean mode).
  RealBuffer inverse_laplacian;
  // -sum_a derivative[a]^2
  RealBuffer laplacian;
  // True lattice |xi|, used by radial cutoffs.
  RealBuffer radius;
  // 1 inside the 2/3-rule sphere |xi| < dealias_radius, else 0.
  RealBuffer dealias;
  // Hermitian multiplicity of each stored coefficient (1 or 2).
  RealBuffer multiplicity;
};

std::shared_ptr<const WaveTable> wave_table(const Grid& grid);

}  // namespace besov
