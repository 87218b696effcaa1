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

#include "besov/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace besov {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Grid::Grid(int dim, std::size_t n, double length) : dim_(dim), n_(n), length_(length) {
  if (dim < 1) throw std::invalid_argument("grid dimension must be >= 1");
  if (n < 8 || !is_power_of_two(n))
    throw std::invalid_argument("points per axis must be a power of two >= 8, got " +
                                std::to_string(n));
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("box length must be positive and finite");
  point_count_ = 1;
  for (int a = 0; a < dim; ++a) point_count_ *= n;
  spectral_count_ = point_count_ / n * (n / 2 + 1);
}

double Grid::cell_volume() const { return std::pow(spacing(), dim_); }

double Grid::volume() const { return std::pow(length_, dim_); }

double Grid::wavenumber_step() const { return 2.0 * std::numbers::pi / length_; }

double Grid::max_wavenumber() const {
  return std::numbers::pi * static_cast<double>(n_) / length_;
}

long Grid::signed_index(std::size_t slot) const {
  const long s = static_cast<long>(slot);
  const long n = static_cast<long>(n_);
  return s < n / 2 ? s : s - n;
}

std::size_t Grid::slot_of(long index) const {
  const long n = static_cast<long>(n_);
  long r = index % n;
  if (r < 0) r += n;
  return static_cast<std::size_t>(r);
}

void Grid::unflatten_physical(std::size_t flat, std::span<std::size_t> out) const {
  for (int a = dim_ - 1; a >= 0; --a) {
    out[a] = flat % n_;
    flat /= n_;
  }
}

void Grid::unflatten_spectral(std::size_t flat, std::span<std::size_t> out) const {
  out[dim_ - 1] = flat % half_n();
  flat /= half_n();
  for (int a = dim_ - 2; a >= 0; --a) {
    out[a] = flat % n_;
    flat /= n_;
  }
}

}  // namespace besov
