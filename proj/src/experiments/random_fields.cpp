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

#include "besov/experiments/random_fields.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "besov/spectral_ops.hpp"

namespace besov::experiments {
namespace {

struct Mode {
  std::vector<long> k;
  double xi2 = 0.0;
};

// Lattice vectors in the open half space (first nonzero entry positive) with
// |xi| <= radius, in lexicographic order.
std::vector<Mode> half_space_modes(const Grid& grid, double radius) {
  const double step = grid.wavenumber_step();
  const long kmax = static_cast<long>(std::floor(radius / step));
  if (static_cast<double>(kmax) >= grid.dealias_radius() / step)
    throw std::invalid_argument("random field radius exceeds the dealiased band");
  const int d = grid.dim();
  std::vector<Mode> modes;
  std::vector<long> k(d, -kmax);
  while (true) {
    bool positive = false;
    for (int a = 0; a < d; ++a) {
      if (k[a] != 0) {
        positive = k[a] > 0;
        break;
      }
    }
    double xi2 = 0.0;
    for (long v : k) xi2 += std::pow(step * static_cast<double>(v), 2);
    if (positive && std::sqrt(xi2) <= radius) modes.push_back({k, xi2});
    int a = d - 1;
    while (a >= 0 && k[a] == kmax) k[a--] = -kmax;
    if (a < 0) break;
    ++k[a];
  }
  return modes;
}

ScalarField sample_modes(const Grid& grid, const std::vector<Mode>& modes,
                         const std::vector<double>& a, const std::vector<double>& b) {
  const double step = grid.wavenumber_step();
  const int d = grid.dim();
  ScalarField out(grid);
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < grid.point_count(); ++i) {
    grid.unflatten_physical(i, idx);
    double v = 0.0;
    for (std::size_t m = 0; m < modes.size(); ++m) {
      double phase = 0.0;
      for (int ax = 0; ax < d; ++ax)
        phase += step * static_cast<double>(modes[m].k[ax]) * grid.coordinate(idx[ax]);
      v += a[m] * std::cos(phase) + b[m] * std::sin(phase);
    }
    out[i] = v;
  }
  return out;
}

}  // namespace

ScalarField random_scalar_field(const Grid& grid, std::uint64_t seed, double radius) {
  const auto modes = half_space_modes(grid, radius);
  if (modes.empty()) throw std::invalid_argument("no lattice modes inside the requested radius");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<double> a(modes.size()), b(modes.size());
  for (std::size_t m = 0; m < modes.size(); ++m) {
    a[m] = unit(rng);
    b[m] = unit(rng);
  }
  ScalarField f = sample_modes(grid, modes, a, b);
  const double norm = lp_norm(f, 2.0);
  f *= 1.0 / norm;
  return f;
}

VectorField random_solenoidal_field(const Grid& grid, std::uint64_t seed, double radius) {
  const auto modes = half_space_modes(grid, radius);
  if (modes.empty()) throw std::invalid_argument("no lattice modes inside the requested radius");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const int d = grid.dim();
  std::vector<ScalarField> comps;
  for (int c = 0; c < d; ++c) {
    std::vector<double> a(modes.size()), b(modes.size());
    for (std::size_t m = 0; m < modes.size(); ++m) {
      a[m] = unit(rng);
      b[m] = unit(rng);
    }
    comps.push_back(sample_modes(grid, modes, a, b));
  }
  VectorField u = leray_project(VectorField(std::move(comps)));
  const double norm = lp_norm(u, 2.0);
  u *= 1.0 / norm;
  return u;
}

}  // namespace besov::experiments
