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

#include "besov/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "besov/fft.hpp"
#include "besov/kernels.hpp"
#include "besov/spectral_ops.hpp"
#include "besov/wave_table.hpp"

namespace besov {
namespace {

void require_profile_matches(const Grid& grid, const PhiProfile& profile, int d) {
  if (grid.dim() != d) throw std::invalid_argument("grid dimension does not match d");
  if (d < 2) throw std::invalid_argument("the data families need d >= 2");
  if (profile.d != d) throw std::invalid_argument("profile was built for a different d");
  if (profile.grid1d.n() != grid.n() || profile.grid1d.length() != grid.length())
    throw std::invalid_argument("profile grid does not match the field grid");
}

// Tensor product spectrum: coef(k_0, ..., k_{d-1}) = prod_a axis[a][slot(k_a)].
Spectrum separable_spectrum(const Grid& grid, const std::vector<const std::vector<Complex>*>& axis) {
  Spectrum out(grid);
  const int d = grid.dim();
  std::vector<std::size_t> idx(d);
  auto coefs = out.coefficients();
  for (std::size_t s = 0; s < coefs.size(); ++s) {
    grid.unflatten_spectral(s, idx);
    Complex c(1.0, 0.0);
    for (int a = 0; a < d && c != Complex(0.0, 0.0); ++a) c *= (*axis[a])[idx[a]];
    coefs[s] = c;
  }
  return out;
}

// 1D coefficients of c(x) cos(K * 2 pi x / L): (c_{k-K} + c_{k+K}) / 2.
std::vector<Complex> modulate(const Grid& line, const std::vector<Complex>& c, long carrier) {
  std::vector<Complex> out(c.size());
  for (std::size_t slot = 0; slot < c.size(); ++slot) {
    const long k = line.signed_index(slot);
    out[slot] = 0.5 * (c[line.slot_of(k - carrier)] + c[line.slot_of(k + carrier)]);
  }
  return out;
}

ScalarField line_field(const Grid& line, const std::vector<Complex>& c) {
  Spectrum s(line);
  for (std::size_t slot = 0; slot < line.half_n(); ++slot) s.coefficients()[slot] = c[slot];
  return transform_inverse(s);
}

// cos(2 pi K i / N) with the phase reduced mod N before scaling.
double lattice_cos(long carrier, std::size_t i, std::size_t n) {
  const long nn = static_cast<long>(n);
  const long phase = (carrier % nn) * static_cast<long>(i) % nn;
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(n));
}

double lattice_sin(long carrier, std::size_t i, std::size_t n) {
  const long nn = static_cast<long>(n);
  const long phase = (carrier % nn) * static_cast<long>(i) % nn;
  return std::sin(2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(n));
}

}  // namespace

double carrier_frequency(int n) { return 17.0 / 12.0 * std::ldexp(1.0, n); }

std::size_t required_points(int n, double length) {
  const double needed = 3.0 * length * (carrier_frequency(n) + 1.0) / (2.0 * std::numbers::pi);
  // Guard the exact-integer case for L = 24 pi (needed = 51 * 2^n + 36).
  const auto minimal = static_cast<std::size_t>(std::ceil(needed - 1e-9));
  return std::max<std::size_t>(8, next_power_of_two(minimal));
}

void require_resolved(const Grid& grid, int n) {
  const double need = carrier_frequency(n) + 1.0;
  if (grid.dealias_radius() < need * (1.0 - 1e-12)) {
    std::ostringstream msg;
    msg << "grid N=" << grid.n() << ", L=" << grid.length() << " does not resolve level n=" << n
        << ": dealias radius " << grid.dealias_radius() << " < " << need << " (need N >= "
        << required_points(n, grid.length()) << ")";
    throw ResolutionError(msg.str());
  }
}

long lattice_index(const Grid& grid, double xi) {
  const double k = xi / grid.wavenumber_step();
  const double rounded = std::round(k);
  if (std::abs(k - rounded) > 1e-9 * std::max(1.0, std::abs(k))) {
    std::ostringstream msg;
    msg << "frequency " << xi << " is not on the lattice of a box with L=" << grid.length()
        << " (index " << k << ")";
    throw ConstructionError(msg.str());
  }
  return static_cast<long>(rounded);
}

Grid line_grid(const Grid& grid) { return Grid(1, grid.n(), grid.length()); }

double PhiProfile::hat(double xi) const { return smooth_step(xi, inner_radius, outer_radius); }

PhiProfile build_phi_profile(int d, const Grid& grid1d) {
  if (grid1d.dim() != 1) throw std::invalid_argument("phi profile needs a 1D grid");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
  PhiProfile prof{d,  grid1d, std::pow(4.0, -d), std::pow(2.0, -d), {}, {}, {}, ScalarField(grid1d),
                  ScalarField(grid1d), ScalarField(grid1d)};
  const std::size_t n = grid1d.n();
  const double step = grid1d.wavenumber_step();
  prof.coef.resize(n);
  prof.coef_d1.resize(n);
  prof.coef_d2.resize(n);
  for (std::size_t slot = 0; slot < n; ++slot) {
    const double xi = step * static_cast<double>(grid1d.signed_index(slot));
    const double h = prof.hat(xi);
    if (h > 0.0) ++prof.support_samples;
    // coef(k) = (1/L) phi_hat(xi_k); derivatives multiply by i xi and -xi^2.
    const Complex c(h / grid1d.length(), 0.0);
    prof.coef[slot] = c;
    prof.coef_d1[slot] = Complex(0.0, xi) * c;
    prof.coef_d2[slot] = -xi * xi * c;
  }
  if (prof.support_samples < 2) {
    std::ostringstream msg;
    msg << "frequency lattice too coarse for phi_hat: spacing " << step << " leaves "
        << prof.support_samples << " nonzero samples inside |xi| < " << prof.outer_radius;
    throw ResolutionError(msg.str());
  }
  prof.coarse_support = prof.support_samples < 4;
  if (prof.coef[n / 2] != Complex(0.0, 0.0))
    throw ResolutionError("phi_hat does not vanish at the Nyquist index");

  prof.phi = line_field(grid1d, prof.coef);
  prof.phi_d1 = line_field(grid1d, prof.coef_d1);
  prof.phi_d2 = line_field(grid1d, prof.coef_d2);
  prof.center = prof.phi[0];
  prof.sup_norm = 0.0;
  for (double v : prof.phi.values()) prof.sup_norm = std::max(prof.sup_norm, std::abs(v));

  // Walk out from the origin in both directions (phi is even).
  std::size_t reach = 0;
  while (reach + 1 < n / 2 && prof.phi[reach + 1] >= 0.5 * prof.sup_norm &&
         prof.phi[n - reach - 1] >= 0.5 * prof.sup_norm)
    ++reach;
  prof.delta = grid1d.coordinate(reach);
  return prof;
}

VectorField build_f_n(int n, double s, int d, const Grid& grid, const PhiProfile& profile) {
  require_profile_matches(grid, profile, d);
  const Grid line = line_grid(grid);
  const long carrier = lattice_index(grid, carrier_frequency(n));
  require_resolved(grid, n);

  const std::vector<Complex> modulated = modulate(line, profile.coef, carrier);
  std::vector<const std::vector<Complex>*> axes(d, &profile.coef);
  axes[0] = &modulated;
  Spectrum potential = separable_spectrum(grid, axes);
  potential *= std::exp2(-n * (s + 1.0));

  std::vector<ScalarField> comps(d, ScalarField(grid));
  Spectrum d2 = derivative(potential, 1);
  d2 *= -1.0;
  comps[0] = transform_inverse(d2);
  comps[1] = transform_inverse(derivative(potential, 0));
  return VectorField(std::move(comps));
}

VectorField build_g_n(int n, int d, const Grid& grid, const PhiProfile& profile) {
  require_profile_matches(grid, profile, d);
  const double amplitude = 12.0 / 17.0 * std::exp2(-n);

  std::vector<const std::vector<Complex>*> first(d, &profile.coef);
  first[1] = &profile.coef_d1;  // phi(x_1) phi'(x_2) Phi
  std::vector<const std::vector<Complex>*> second(d, &profile.coef);
  second[0] = &profile.coef_d1;  // phi'(x_1) phi(x_2) Phi

  Spectrum a = separable_spectrum(grid, first);
  Spectrum b = separable_spectrum(grid, second);
  a *= -amplitude;
  b *= amplitude;
  std::vector<ScalarField> comps(d, ScalarField(grid));
  comps[0] = transform_inverse(a);
  comps[1] = transform_inverse(b);
  return VectorField(std::move(comps));
}

DatumFamily build_family(int n, double s, int d, const Grid& grid, const PhiProfile& profile) {
  VectorField f = build_f_n(n, s, d, grid, profile);
  VectorField g = build_g_n(n, d, grid, profile);
  VectorField u0 = f + g;
  AdvectionResult adv = advective_term(u0, u0);
  VectorField v0 = -1.0 * std::move(adv.value);
  VectorField pv0 = leray_project(v0);
  return DatumFamily{n,       s,      d,           grid, std::move(f), std::move(g), std::move(u0),
                     std::move(v0), std::move(pv0), adv.under_resolved};
}

VectorField closed_form_product(int n, double s, int d, const Grid& grid,
                                const PhiProfile& profile) {
  require_profile_matches(grid, profile, d);
  const long carrier = lattice_index(grid, carrier_frequency(n));
  const std::size_t N = grid.n();
  const double c_low = 12.0 / 17.0 * std::exp2(-n * (s + 2.0));  // (12/17) 2^{-n(s+2)}
  const double c_mid = std::exp2(-n * (s + 1.0));                 // 2^{-n(s+1)}
  const double c_top = 17.0 / 12.0 * std::exp2(-n * s);           // (17/12) 2^{-ns}
  const auto& p0 = profile.phi;
  const auto& p1 = profile.phi_d1;
  const auto& p2 = profile.phi_d2;

  VectorField out(grid, d);
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < grid.point_count(); ++i) {
    grid.unflatten_physical(i, idx);
    const std::size_t a = idx[0];
    const std::size_t b = idx[1];
    double big_phi2 = 1.0;
    for (int k = 2; k < d; ++k) big_phi2 *= p0[idx[k]] * p0[idx[k]];
    const double c = lattice_cos(carrier, a, N);
    const double sn = lattice_sin(carrier, a, N);

    const double first = c_low * p0[a] * p1[a] * c * p1[b] * p1[b]
                       - c_mid * p0[a] * p0[a] * sn * p1[b] * p1[b]
                       - c_low * p1[a] * p0[b] * p2[b] * p0[a] * c;
    const double second = c_top * p0[a] * p0[a] * c * p0[b] * p1[b]
                        + c_mid * p0[a] * p1[a] * sn * p0[b] * p1[b]
                        - c_low * p0[a] * p2[a] * c * p0[b] * p1[b]
                        + c_low * p1[a] * p1[a] * c * p0[b] * p1[b];
    out[0][i] = big_phi2 * first;
    out[1][i] = big_phi2 * second;
  }
  return out;
}

double lemma_m_value(double p, int n, const PhiProfile& profile, const Grid& grid1d) {
  if (grid1d.dim() != 1) throw std::invalid_argument("lemma_m_value needs a 1D grid");
  if (profile.grid1d.n() != grid1d.n() || profile.grid1d.length() != grid1d.length())
    throw std::invalid_argument("profile grid does not match");
  require_resolved(grid1d, n);
  const long carrier = lattice_index(grid1d, carrier_frequency(n));
  ScalarField f(grid1d);
  for (std::size_t i = 0; i < grid1d.n(); ++i)
    f[i] = profile.phi[i] * profile.phi[i] * lattice_cos(carrier, i, grid1d.n());
  return lp_norm(f, p);
}

double cosine_power_average(double p) {
  if (std::isinf(p)) return 1.0;
  return std::tgamma(0.5 * (p + 1.0)) / (std::sqrt(std::numbers::pi) * std::tgamma(0.5 * p + 1.0));
}

double lemma_m_plateau(double p, const PhiProfile& profile) {
  validate_exponent(p);
  ScalarField sq(profile.grid1d);
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = profile.phi[i] * profile.phi[i];
  if (std::isinf(p)) return lp_norm(sq, p);
  const double integral = std::pow(lp_norm(sq, p), p);
  return std::pow(cosine_power_average(p) * integral, 1.0 / p);
}

ProductLowerBound product_lower_bound(int n, const BesovParams& params, const DatumFamily& family,
                                      const CutoffPair& cut) {
  params.validate();
  if (family.n != n) throw std::invalid_argument("family was built for a different level");
  const Grid& grid = family.grid;
  AdvectionResult adv = advective_term(family.g, family.f);
  ProductLowerBound out{std::move(adv.value), 0.0, 0, 0.0, {}, 0.0};

  const VectorSpectrum spec = transform_forward(out.product);
  const SpectralMask outside = SpectralMask::radial(
      grid, [&](double t) { return 1.0 - cut.block(n, t); });
  const double total = parseval_norm(spec);
  out.leakage = total == 0.0 ? 0.0 : parseval_norm(outside.apply(spec)) / total;
  if (out.leakage > kLeakageTolerance) {
    std::ostringstream msg;
    msg << "g_n . grad f_n leaks out of block " << n << ": relative L2 fraction " << out.leakage;
    throw ConstructionError(msg.str());
  }

  const BlockNorms blocks = block_norms(spec, params.p, cut);
  out.weak_norm = blocks.weak(params.s);
  out.populated_block = blocks.dominant_block(params.s);
  for (std::size_t i = 0; i < out.product.size(); ++i) {
    out.component_weak_norms.push_back(
        besov_norm_weak(out.product[i], params.s, params.p, cut).value);
    if (i >= 2)
      out.trailing_components_max =
          std::max(out.trailing_components_max, lp_norm(out.product[i], INFINITY));
  }
  return out;
}

}  // namespace besov
