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

#include <optional>
#include <stdexcept>
#include <vector>

#include "besov/field.hpp"
#include "besov/littlewood_paley.hpp"

namespace besov {

class BlowUpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Classical RK4 with the 2/3-rule dealiased advection, re-projected onto
// divergence-free fields after every step.
struct SolverConfig {
  // Fixed step. When unset the step is cfl * dx / max|u|, capped by dt_max.
  std::optional<double> dt;
  double cfl = 0.5;
  double dt_max = 0.01;
  double final_time = 0.1;
  // Output times in [0, final_time], sorted. The step is shortened to land on each.
  std::vector<double> sample_times;
  // Abort when max|u| exceeds this multiple of its initial value.
  double blowup_factor = 10.0;

  void validate() const;
};

struct Snapshot {
  double t = 0.0;
  VectorField u;
  double energy = 0.0;      // (1/2) ||u||_{L^2}^2
  double divergence = 0.0;  // ||div u||_2 / (||u||_2 * max |xi|)
  double enstrophy = 0.0;   // (1/2) ||curl u||_{L^2}^2, d = 2 only
};

struct Trajectory {
  std::vector<Snapshot> snapshots;
  std::size_t steps = 0;
  bool under_resolved = false;

  // Snapshot recorded at time t (exact match within 1e-12); throws otherwise.
  const Snapshot& at(double t) const;
};

// -P(u . grad u). Sets *under_resolved when u has energy outside the dealiased band.
VectorField rhs(const VectorField& u, bool* under_resolved = nullptr);
VectorSpectrum rhs_spectrum(const VectorSpectrum& u);

// One RK4 step of size dt (negative dt integrates backwards).
VectorField step(const VectorField& u, double dt);
VectorSpectrum step_spectrum(const VectorSpectrum& u, double dt);

Trajectory solve(const VectorField& u0, const SolverConfig& config);

double kinetic_energy(const VectorField& u);
double relative_divergence(const VectorField& u);
double enstrophy(const VectorField& u);

struct BesovRow {
  double t = 0.0;
  double below = 0.0;  // B^{s-1}_{p,r}
  double at = 0.0;     // B^s_{p,r}
  double above = 0.0;  // B^{s+1}_{p,r}
  bool under_resolved = false;
};

std::vector<BesovRow> trajectory_besov(const Trajectory& traj, const BesovParams& params,
                                       const CutoffPair& cut);

}  // namespace besov
