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

#include <span>

#include "besov/field.hpp"
#include "besov/fft.hpp"
#include "besov/wave_table.hpp"

namespace besov {

// A real Fourier multiplier: apply() maps coef(k) to m(xi_k) * coef(k).
class SpectralMask {
 public:
  SpectralMask(Grid grid, RealBuffer values);

  // m(xi) = profile(|xi|) on the lattice.
  template <class F>
  static SpectralMask radial(const Grid& grid, F&& profile);

  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }

  Spectrum apply(const Spectrum& s) const;
  void apply_in_place(Spectrum& s) const;
  VectorSpectrum apply(const VectorSpectrum& s) const;
  ScalarField apply(const ScalarField& f) const;
  VectorField apply(const VectorField& v) const;

 private:
  Grid grid_;
  RealBuffer values_;
};

// Indicator of the 2/3-rule sphere |xi| < (2/3) * pi * N / L.
SpectralMask dealias_mask(const Grid& grid);

Spectrum derivative(const Spectrum& s, int axis);
VectorSpectrum gradient(const Spectrum& s);
Spectrum divergence(const VectorSpectrum& v);
Spectrum laplacian(const Spectrum& s);

VectorField gradient(const ScalarField& f);
ScalarField divergence(const VectorField& v);
ScalarField laplacian(const ScalarField& f);

// Leray projector P = I + (-Delta)^{-1} grad div and its complement
// Q = -(-Delta)^{-1} grad div. The mean mode passes through P and is removed
// by Q, so P + Q = I holds mode by mode.
VectorSpectrum leray_project(const VectorSpectrum& v);
VectorSpectrum grad_project(const VectorSpectrum& v);
VectorField leray_project(const VectorField& v);
VectorField grad_project(const VectorField& v);

// Fraction of spectral energy at or beyond the dealias radius.
double out_of_band_fraction(const Spectrum& s);
double out_of_band_fraction(const VectorSpectrum& v);

inline constexpr double kOutOfBandTolerance = 1e-10;

struct AdvectionResult {
  VectorField value;
  // Either input carries more than kOutOfBandTolerance of its energy outside
  // the dealiased band.
  bool under_resolved = false;
  double out_of_band = 0.0;
};

// (u . grad) v with spectral derivatives, physical-space products and the
// 2/3-rule truncation of the result. u must have d components.
AdvectionResult advective_term(const VectorField& u, const VectorField& v);

// Same product from a physical u and the spectrum of v; returns the
// dealiased spectrum. Building block for the time stepper.
VectorSpectrum advective_spectrum(const VectorField& u, const VectorSpectrum& v);

// Discrete L^p norm (sum |f(x_i)|^p dx^d)^(1/p), or max |f| for p = inf.
// Vector fields use the pointwise Euclidean magnitude.
double lp_norm(const ScalarField& f, double p);
double lp_norm(const VectorField& v, double p);
ScalarField magnitude_squared(const VectorField& v);
double max_magnitude(const VectorField& v);

// L^2 inner product sum_x <u(x), v(x)> dx^d.
double inner_product(const VectorField& u, const VectorField& v);
// L^2 norm from the spectrum via Parseval, sqrt(L^d sum_k |coef(k)|^2).
double parseval_norm(const Spectrum& s);
double parseval_norm(const VectorSpectrum& v);

void validate_exponent(double p);

template <class F>
SpectralMask SpectralMask::radial(const Grid& grid, F&& profile) {
  auto table = wave_table(grid);
  RealBuffer m(grid.spectral_count());
  for (std::size_t s = 0; s < m.size(); ++s) m[s] = profile(table->radius[s]);
  return SpectralMask(grid, std::move(m));
}

}  // namespace besov

