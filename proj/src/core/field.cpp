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

#include "besov/field.hpp"

#include <stdexcept>

#include "besov/kernels.hpp"

namespace besov {
namespace {

void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("fields live on different grids");
}

template <class V>
void require_same_shape(const V& a, const V& b) {
  require_same_grid(a.grid(), b.grid());
  if (a.size() != b.size()) throw std::invalid_argument("component count mismatch");
}

double* raw(ComplexBuffer& c) { return reinterpret_cast<double*>(c.data()); }

}  // namespace

ScalarField::ScalarField(Grid grid) : grid_(grid), values_(grid.point_count(), 0.0) {}

ScalarField::ScalarField(Grid grid, RealBuffer values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.point_count())
    throw std::invalid_argument("sample count does not match the grid");
}

ScalarField& ScalarField::operator+=(const ScalarField& other) { return add_scaled(1.0, other); }

ScalarField& ScalarField::operator-=(const ScalarField& other) { return add_scaled(-1.0, other); }

ScalarField& ScalarField::operator*=(double c) {
  for (double& v : values_) v *= c;
  return *this;
}

ScalarField& ScalarField::add_scaled(double a, const ScalarField& other) {
  require_same_grid(grid_, other.grid_);
  kernels::active().axpy(values_.data(), a, other.values_.data(), values_.size());
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double c, ScalarField a) { return a *= c; }

Spectrum::Spectrum(Grid grid) : grid_(grid), coefficients_(grid.spectral_count()) {}

Spectrum::Spectrum(Grid grid, ComplexBuffer coefficients)
    : grid_(grid), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != grid_.spectral_count())
    throw std::invalid_argument("coefficient count does not match the grid");
}

std::size_t Spectrum::stored_slot(std::span<const long> k, bool& conjugate) const {
  if (static_cast<int>(k.size()) != grid_.dim())
    throw std::invalid_argument("wavenumber index has the wrong dimension");
  const int d = grid_.dim();
  const std::size_t last = grid_.slot_of(k[d - 1]);
  conjugate = last > grid_.n() / 2;
  std::size_t flat = 0;
  for (int a = 0; a < d - 1; ++a) flat = flat * grid_.n() + grid_.slot_of(conjugate ? -k[a] : k[a]);
  flat = flat * grid_.half_n() + (conjugate ? grid_.slot_of(-k[d - 1]) : last);
  return flat;
}

Complex Spectrum::coefficient(std::span<const long> k) const {
  bool conj = false;
  const Complex c = coefficients_[stored_slot(k, conj)];
  return conj ? std::conj(c) : c;
}

void Spectrum::set_coefficient(std::span<const long> k, Complex value) {
  bool conj = false;
  const std::size_t slot = stored_slot(k, conj);
  coefficients_[slot] = conj ? std::conj(value) : value;
}

Spectrum& Spectrum::operator+=(const Spectrum& other) { return add_scaled(1.0, other); }
Spectrum& Spectrum::operator-=(const Spectrum& other) { return add_scaled(-1.0, other); }

Spectrum& Spectrum::operator*=(double c) {
  for (Complex& z : coefficients_) z *= c;
  return *this;
}

Spectrum& Spectrum::add_scaled(double a, const Spectrum& other) {
  require_same_grid(grid_, other.grid_);
  kernels::active().axpy(raw(coefficients_), a,
                         reinterpret_cast<const double*>(other.coefficients_.data()),
                         2 * coefficients_.size());
  return *this;
}

VectorField::VectorField(Grid grid, std::size_t components)
    : grid_(grid), components_(components, ScalarField(grid)) {
  if (components == 0) throw std::invalid_argument("vector field needs at least one component");
}

VectorField::VectorField(std::vector<ScalarField> components)
    : grid_(components.empty() ? throw std::invalid_argument("vector field needs components")
                               : components.front().grid()),
      components_(std::move(components)) {
  for (const auto& c : components_) require_same_grid(grid_, c.grid());
}

VectorField& VectorField::operator+=(const VectorField& other) { return add_scaled(1.0, other); }
VectorField& VectorField::operator-=(const VectorField& other) { return add_scaled(-1.0, other); }

VectorField& VectorField::operator*=(double c) {
  for (auto& comp : components_) comp *= c;
  return *this;
}

VectorField& VectorField::add_scaled(double a, const VectorField& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i].add_scaled(a, other[i]);
  return *this;
}

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(double c, VectorField a) { return a *= c; }

VectorSpectrum::VectorSpectrum(Grid grid, std::size_t components)
    : grid_(grid), components_(components, Spectrum(grid)) {
  if (components == 0) throw std::invalid_argument("vector spectrum needs at least one component");
}

VectorSpectrum::VectorSpectrum(std::vector<Spectrum> components)
    : grid_(components.empty() ? throw std::invalid_argument("vector spectrum needs components")
                               : components.front().grid()),
      components_(std::move(components)) {
  for (const auto& c : components_) require_same_grid(grid_, c.grid());
}

VectorSpectrum& VectorSpectrum::operator+=(const VectorSpectrum& other) {
  return add_scaled(1.0, other);
}

VectorSpectrum& VectorSpectrum::operator*=(double c) {
  for (auto& comp : components_) comp *= c;
  return *this;
}

VectorSpectrum& VectorSpectrum::add_scaled(double a, const VectorSpectrum& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i].add_scaled(a, other[i]);
  return *this;
}

}  // namespace besov
