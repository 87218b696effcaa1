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

#include "besov/spectral_ops.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "besov/kernels.hpp"
#include "besov/wave_table.hpp"

namespace besov {
namespace {

void require_velocity(const VectorField& v) {
  if (static_cast<int>(v.size()) != v.grid().dim())
    throw std::invalid_argument("expected a vector field with d components, got " +
                                std::to_string(v.size()));
}

void require_velocity(const VectorSpectrum& v) {
  if (static_cast<int>(v.size()) != v.grid().dim())
    throw std::invalid_argument("expected a vector spectrum with d components, got " +
                                std::to_string(v.size()));
}

// Q-part coefficients: k (k . v) / |k|^2, computed as s = (k . v) / |k|^2 then
// k_a * s per component.
Spectrum divergence_potential(const VectorSpectrum& v, const WaveTable& table) {
  const auto& k = kernels::active();
  Spectrum s(v.grid());
  const std::size_t n = s.size();
  for (std::size_t a = 0; a < v.size(); ++a)
    k.accumulate_scaled(s.coefficients().data(), v[a].coefficients().data(),
                        table.derivative[a].data(), n);
  k.scale(s.coefficients().data(), table.inverse_laplacian.data(), n);
  return s;
}

}  // namespace

void validate_exponent(double p) {
  if (std::isnan(p) || p < 1.0)
    throw std::invalid_argument("L^p exponent must lie in [1, inf], got " + std::to_string(p));
}

SpectralMask::SpectralMask(Grid grid, RealBuffer values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.spectral_count())
    throw std::invalid_argument("mask size does not match the grid");
}

Spectrum SpectralMask::apply(const Spectrum& s) const {
  Spectrum out(s.grid());
  if (!(s.grid() == grid_)) throw std::invalid_argument("mask and spectrum grids differ");
  kernels::active().scale_into(out.coefficients().data(), s.coefficients().data(), values_.data(),
                                s.size());
  return out;
}

void SpectralMask::apply_in_place(Spectrum& s) const {
  if (!(s.grid() == grid_)) throw std::invalid_argument("mask and spectrum grids differ");
  kernels::active().scale(s.coefficients().data(), values_.data(), s.size());
}

VectorSpectrum SpectralMask::apply(const VectorSpectrum& s) const {
  VectorSpectrum out = s;
  for (std::size_t i = 0; i < out.size(); ++i) apply_in_place(out[i]);
  return out;
}

ScalarField SpectralMask::apply(const ScalarField& f) const {
  return transform_inverse(apply(transform_forward(f)));
}

VectorField SpectralMask::apply(const VectorField& v) const {
  return transform_inverse(apply(transform_forward(v)));
}

SpectralMask dealias_mask(const Grid& grid) {
  auto table = wave_table(grid);
  return SpectralMask(grid, table->dealias);
}

Spectrum derivative(const Spectrum& s, int axis) {
  if (axis < 0 || axis >= s.grid().dim()) throw std::invalid_argument("axis out of range");
  auto table = wave_table(s.grid());
  Spectrum out(s.grid());
  kernels::active().imag_scale_into(out.coefficients().data(), s.coefficients().data(),
                                     table->derivative[axis].data(), s.size());
  return out;
}

VectorSpectrum gradient(const Spectrum& s) {
  std::vector<Spectrum> comps;
  for (int a = 0; a < s.grid().dim(); ++a) comps.push_back(derivative(s, a));
  return VectorSpectrum(std::move(comps));
}

Spectrum divergence(const VectorSpectrum& v) {
  require_velocity(v);
  Spectrum out(v.grid());
  for (int a = 0; a < v.grid().dim(); ++a) out += derivative(v[a], a);
  return out;
}

Spectrum laplacian(const Spectrum& s) {
  auto table = wave_table(s.grid());
  Spectrum out(s.grid());
  kernels::active().scale_into(out.coefficients().data(), s.coefficients().data(),
                                table->laplacian.data(), s.size());
  return out;
}

VectorField gradient(const ScalarField& f) { return transform_inverse(gradient(transform_forward(f))); }

ScalarField divergence(const VectorField& v) {
  return transform_inverse(divergence(transform_forward(v)));
}

ScalarField laplacian(const ScalarField& f) {
  return transform_inverse(laplacian(transform_forward(f)));
}

VectorSpectrum grad_project(const VectorSpectrum& v) {
  require_velocity(v);
  auto table = wave_table(v.grid());
  const Spectrum s = divergence_potential(v, *table);
  VectorSpectrum out(v.grid(), v.size());
  for (std::size_t a = 0; a < v.size(); ++a)
    kernels::active().scale_into(out[a].coefficients().data(), s.coefficients().data(),
                                  table->derivative[a].data(), s.size());
  return out;
}

VectorSpectrum leray_project(const VectorSpectrum& v) {
  require_velocity(v);
  auto table = wave_table(v.grid());
  const Spectrum s = divergence_potential(v, *table);
  VectorSpectrum out(v.grid(), v.size());
  for (std::size_t a = 0; a < v.size(); ++a)
    kernels::active().subtract_scaled(out[a].coefficients().data(), v[a].coefficients().data(),
                                       s.coefficients().data(), table->derivative[a].data(),
                                       s.size());
  return out;
}

VectorField leray_project(const VectorField& v) {
  return transform_inverse(leray_project(transform_forward(v)));
}

VectorField grad_project(const VectorField& v) {
  return transform_inverse(grad_project(transform_forward(v)));
}

double out_of_band_fraction(const Spectrum& s) {
  auto table = wave_table(s.grid());
  const auto& k = kernels::active();
  const auto* c = s.coefficients().data();
  const double total = k.weighted_dot(c, c, table->multiplicity.data(), s.size());
  if (total == 0.0) return 0.0;
  RealBuffer w(s.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = table->multiplicity[i] * (1.0 - table->dealias[i]);
  return k.weighted_dot(c, c, w.data(), s.size()) / total;
}

double out_of_band_fraction(const VectorSpectrum& v) {
  double total = 0.0;
  double outside = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double e = parseval_norm(v[i]);
    total += e * e;
    outside += out_of_band_fraction(v[i]) * e * e;
  }
  return total == 0.0 ? 0.0 : outside / total;
}

VectorSpectrum advective_spectrum(const VectorField& u, const VectorSpectrum& v) {
  require_velocity(u);
  if (!(u.grid() == v.grid())) throw std::invalid_argument("advective_term: grids differ");
  const Grid& grid = u.grid();
  auto table = wave_table(grid);
  const auto& k = kernels::active();
  const int d = grid.dim();

  VectorSpectrum out(grid, v.size());
  Spectrum scratch(grid);
  for (std::size_t i = 0; i < v.size(); ++i) {
    ScalarField acc(grid);
    for (int j = 0; j < d; ++j) {
      k.imag_scale_into(scratch.coefficients().data(), v[i].coefficients().data(),
                        table->derivative[j].data(), scratch.size());
      const ScalarField dv = transform_inverse(scratch);
      k.multiply_add(acc.values().data(), u[j].values().data(), dv.values().data(), acc.size());
    }
    out[i] = transform_forward(acc);
    k.scale(out[i].coefficients().data(), table->dealias.data(), out[i].size());
  }
  return out;
}

AdvectionResult advective_term(const VectorField& u, const VectorField& v) {
  require_velocity(u);
  const VectorSpectrum vs = transform_forward(v);
  const double band = std::max(out_of_band_fraction(transform_forward(u)), out_of_band_fraction(vs));
  return {transform_inverse(advective_spectrum(u, vs)), band > kOutOfBandTolerance, band};
}

ScalarField magnitude_squared(const VectorField& v) {
  ScalarField sq(v.grid());
  for (std::size_t i = 0; i < v.size(); ++i)
    kernels::active().add_squares(sq.values().data(), v[i].values().data(), sq.size());
  return sq;
}

namespace {

double lp_from_squares(const ScalarField& sq, double p) {
  validate_exponent(p);
  const auto& k = kernels::active();
  if (std::isinf(p)) return std::sqrt(std::max(0.0, k.max_value(sq.values().data(), sq.size())));
  const double sum = k.sum_powers(sq.values().data(), p / 2.0, sq.size());
  return std::pow(sum * sq.grid().cell_volume(), 1.0 / p);
}

}  // namespace

double lp_norm(const ScalarField& f, double p) {
  ScalarField sq(f.grid());
  kernels::active().add_squares(sq.values().data(), f.values().data(), sq.size());
  return lp_from_squares(sq, p);
}

double lp_norm(const VectorField& v, double p) { return lp_from_squares(magnitude_squared(v), p); }

double max_magnitude(const VectorField& v) { return lp_norm(v, std::numeric_limits<double>::infinity()); }

double inner_product(const VectorField& u, const VectorField& v) {
  if (!(u.grid() == v.grid()) || u.size() != v.size())
    throw std::invalid_argument("inner_product: shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc += kernels::active().dot(u[i].values().data(), v[i].values().data(), u[i].size());
  return acc * u.grid().cell_volume();
}

double parseval_norm(const Spectrum& s) {
  auto table = wave_table(s.grid());
  const auto* c = s.coefficients().data();
  const double sum = kernels::active().weighted_dot(c, c, table->multiplicity.data(), s.size());
  return std::sqrt(s.grid().volume() * sum);
}

double parseval_norm(const VectorSpectrum& v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double e = parseval_norm(v[i]);
    sum += e * e;
  }
  return std::sqrt(sum);
}

}  // namespace besov
