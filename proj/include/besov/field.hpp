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
#include <span>
#include <utility>
#include <vector>

#include "besov/aligned.hpp"
#include "besov/grid.hpp"

namespace besov {

// Real samples of a scalar function on a periodic grid.
class ScalarField {
 public:
  explicit ScalarField(Grid grid);
  ScalarField(Grid grid, RealBuffer values);

  // Samples f at every grid point; f receives the point coordinates.
  template <class F>
  static ScalarField sample(const Grid& grid, F&& f);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  ScalarField& operator+=(const ScalarField& other);
  ScalarField& operator-=(const ScalarField& other);
  ScalarField& operator*=(double c);
  // this += a * other
  ScalarField& add_scaled(double a, const ScalarField& other);

 private:
  Grid grid_;
  RealBuffer values_;
};

ScalarField operator+(ScalarField a, const ScalarField& b);
ScalarField operator-(ScalarField a, const ScalarField& b);
ScalarField operator*(double c, ScalarField a);

// Fourier coefficients in the half layout of Grid. coef(k) approximates
// (1/L^d) * integral over the box of u(x) exp(-i xi_k . x).
class Spectrum {
 public:
  explicit Spectrum(Grid grid);
  Spectrum(Grid grid, ComplexBuffer coefficients);

  const Grid& grid() const { return grid_; }
  std::span<const Complex> coefficients() const { return coefficients_; }
  std::span<Complex> coefficients() { return coefficients_; }
  std::size_t size() const { return coefficients_.size(); }

  // Coefficient at signed lattice index k (length d), using conjugate
  // symmetry for indices outside the stored half.
  Complex coefficient(std::span<const long> k) const;
  // Sets the stored coefficient for k (and is only meaningful for a
  // Hermitian-consistent assignment; the mirror is implied).
  void set_coefficient(std::span<const long> k, Complex value);

  Spectrum& operator+=(const Spectrum& other);
  Spectrum& operator-=(const Spectrum& other);
  Spectrum& operator*=(double c);
  Spectrum& add_scaled(double a, const Spectrum& other);

 private:
  std::size_t stored_slot(std::span<const long> k, bool& conjugate) const;

  Grid grid_;
  ComplexBuffer coefficients_;
};

// A fixed number of scalar components on one grid. Velocity-like fields carry
// d components; BSVF dumps may carry any count.
class VectorField {
 public:
  VectorField(Grid grid, std::size_t components);
  explicit VectorField(std::vector<ScalarField> components);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return components_.size(); }
  const ScalarField& operator[](std::size_t i) const { return components_[i]; }
  ScalarField& operator[](std::size_t i) { return components_[i]; }
  const std::vector<ScalarField>& components() const { return components_; }

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(double c);
  VectorField& add_scaled(double a, const VectorField& other);

 private:
  Grid grid_;
  std::vector<ScalarField> components_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(double c, VectorField a);

class VectorSpectrum {
 public:
  VectorSpectrum(Grid grid, std::size_t components);
  explicit VectorSpectrum(std::vector<Spectrum> components);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return components_.size(); }
  const Spectrum& operator[](std::size_t i) const { return components_[i]; }
  Spectrum& operator[](std::size_t i) { return components_[i]; }

  VectorSpectrum& operator+=(const VectorSpectrum& other);
  VectorSpectrum& operator*=(double c);
  VectorSpectrum& add_scaled(double a, const VectorSpectrum& other);

 private:
  Grid grid_;
  std::vector<Spectrum> components_;
};

template <class F>
ScalarField ScalarField::sample(const Grid& grid, F&& f) {
  ScalarField out(grid);
  std::vector<std::size_t> idx(grid.dim());
  std::vector<double> x(grid.dim());
  for (std::size_t i = 0; i < grid.point_count(); ++i) {
    grid.unflatten_physical(i, idx);
    for (int a = 0; a < grid.dim(); ++a) x[a] = grid.coordinate(idx[a]);
    out[i] = f(std::span<const double>(x));
  }
  return out;
}

}  // namespace besov
