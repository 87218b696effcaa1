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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "besov/field.hpp"
#include "besov/littlewood_paley.hpp"

namespace besov {

class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 17/12 * 2^n, the oscillation rate of the high-frequency datum at level n.
double carrier_frequency(int n);

// Smallest power-of-two N for which the dealiased band of a box of side L
// contains |xi| <= carrier_frequency(n) + 1. For L = 24 pi this is
// N >= 51 * 2^n + 36 rounded up.
std::size_t required_points(int n, double length = kDefaultBoxLength);

// Throws ResolutionError unless the grid resolves level n.
void require_resolved(const Grid& grid, int n);

// Lattice index k with xi_k = xi; throws ConstructionError when xi is not on
// the lattice (for example when L is not a multiple of 24 pi / 2^m).
long lattice_index(const Grid& grid, double xi);

// Real, even, non-negative bump phi_hat with phi_hat = 1 on |xi| <= 4^-d and 0
// on |xi| >= 2^-d (same transition h as the dyadic cutoffs), sampled on the
// lattice of a 1D grid, together with phi and its first two derivatives. phi
// is the box periodization of the inverse transform of phi_hat.
struct PhiProfile {
  int d = 2;
  Grid grid1d;
  double inner_radius = 0.0;
  double outer_radius = 0.0;
  // Full-length (N, FFT-order) coefficient arrays of phi, phi', phi''.
  std::vector<Complex> coef;
  std::vector<Complex> coef_d1;
  std::vector<Complex> coef_d2;
  ScalarField phi;
  ScalarField phi_d1;
  ScalarField phi_d2;
  double center = 0.0;    // phi(0)
  double sup_norm = 0.0;  // max |phi| on the grid
  // Largest radius with phi >= sup_norm / 2 on [-delta, delta], measured on the grid.
  double delta = 0.0;
  // Lattice samples with phi_hat > 0.
  std::size_t support_samples = 0;
  // Fewer than 4 nonzero samples; construction stays valid but coarse.
  bool coarse_support = false;

  double hat(double xi) const;
};

PhiProfile build_phi_profile(int d, const Grid& grid1d);

// 1D companion grid with the same N and L.
Grid line_grid(const Grid& grid);

// f_n = 2^{-n(s+1)} (-d_2, d_1, 0, ..., 0) [phi(x_1) cos(w x_1) phi(x_2) Phi(x_3..x_d)],
// w = carrier_frequency(n), Phi = phi x ... x phi (Phi = 1 when d = 2).
VectorField build_f_n(int n, double s, int d, const Grid& grid, const PhiProfile& profile);

// g_n = (12/17) 2^{-n} Phi (-phi(x_1) phi'(x_2), phi'(x_1) phi(x_2), 0, ..., 0).
VectorField build_g_n(int n, int d, const Grid& grid, const PhiProfile& profile);

struct DatumFamily {
  int n = 0;
  double s = 0.0;
  int d = 2;
  Grid grid;
  VectorField f;
  VectorField g;
  VectorField u0;   // f + g
  VectorField v0;   // -u0 . grad u0 (dealiased)
  VectorField pv0;  // P(v0)
  bool under_resolved = false;
};

DatumFamily build_family(int n, double s, int d, const Grid& grid, const PhiProfile& profile);

// Pointwise closed-form expansion of g_n . grad f_n from phi, phi', phi''
// samples: three terms in component 1, four in component 2, zero beyond.
VectorField closed_form_product(int n, double s, int d, const Grid& grid,
                                const PhiProfile& profile);

// ||phi^2 cos(w x)||_{L^p} on the 1D box, w = carrier_frequency(n).
double lemma_m_value(double p, int n, const PhiProfile& profile, const Grid& grid1d);

// Limit of lemma_m_value as n grows: (avg_p * integral phi^{2p})^{1/p} with
// avg_p = (1/pi) int_0^pi |cos x|^p dx; ||phi^2||_inf for p = inf.
double lemma_m_plateau(double p, const PhiProfile& profile);
double cosine_power_average(double p);

inline constexpr double kLeakageTolerance = 1e-10;

struct ProductLowerBound {
  VectorField product;        // g_n . grad f_n
  double weak_norm = 0.0;     // ||g_n . grad f_n||_{B^s_{p,inf}}
  int populated_block = 0;    // dominant dyadic block
  double leakage = 0.0;       // L^2 fraction outside Delta_n
  std::vector<double> component_weak_norms;
  double trailing_components_max = 0.0;  // max |(.)_i| for i >= 3
};

// Throws ConstructionError when the product leaks out of block n.
ProductLowerBound product_lower_bound(int n, const BesovParams& params, const DatumFamily& family,
                                      const CutoffPair& cut);

}  // namespace besov
