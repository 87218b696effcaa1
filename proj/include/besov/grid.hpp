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
#include <numbers>
#include <span>
#include <vector>

namespace besov {

// Box side used throughout the experiments: the lattice spacing in frequency
// is 2*pi/L = 1/12, which places the carrier 17/12 * 2^n on lattice index 17 * 2^n.
inline constexpr double kDefaultBoxLength = 24.0 * std::numbers::pi;

// Uniform periodic grid on [0, L)^d with N points per axis.
//
// Physical samples are stored row-major (last axis fastest). Spectra use the
// real-to-complex half layout: the last axis keeps indices 0..N/2 only, the
// other axes store all N indices in FFT order (0, 1, ..., N/2-1, -N/2, ..., -1).
class Grid {
 public:
  Grid(int dim, std::size_t n, double length = kDefaultBoxLength);

  int dim() const { return dim_; }
  std::size_t n() const { return n_; }
  double length() const { return length_; }

  double spacing() const { return length_ / static_cast<double>(n_); }
  double cell_volume() const;
  double volume() const;
  // Frequency spacing 2*pi/L.
  double wavenumber_step() const;
  // Largest resolved |xi| along one axis, pi*N/L.
  double max_wavenumber() const;
  // Radius of the 2/3-rule spherical truncation.
  double dealias_radius() const { return 2.0 / 3.0 * max_wavenumber(); }

  std::size_t point_count() const { return point_count_; }
  std::size_t spectral_count() const { return spectral_count_; }
  std::size_t half_n() const { return n_ / 2 + 1; }

  // FFT-order slot -> signed lattice index in [-N/2, N/2).
  long signed_index(std::size_t slot) const;
  // Signed lattice index (any integer) -> FFT-order slot.
  std::size_t slot_of(long index) const;

  // Coordinates of physical point `axis_index` along one axis.
  double coordinate(std::size_t axis_index) const { return axis_index * spacing(); }

  // Splits a flat index into per-axis indices.
  void unflatten_physical(std::size_t flat, std::span<std::size_t> out) const;
  void unflatten_spectral(std::size_t flat, std::span<std::size_t> out) const;

  bool operator==(const Grid& other) const = default;

 private:
  int dim_;
  std::size_t n_;
  double length_;
  std::size_t point_count_;
  std::size_t spectral_count_;
};

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

}  // namespace besov
