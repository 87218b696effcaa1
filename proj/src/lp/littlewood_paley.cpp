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

#include "besov/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "besov/kernels.hpp"
#include "besov/wave_table.hpp"

namespace besov {

double smooth_transition(double sigma) {
  if (sigma <= 0.0) return 0.0;
  if (sigma >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / sigma);
  const double b = std::exp(-1.0 / (1.0 - sigma));
  return a / (a + b);
}

double smooth_step(double t, double inner, double outer) {
  t = std::abs(t);
  if (t <= inner) return 1.0;
  if (t >= outer) return 0.0;
  return smooth_transition((outer - t) / (outer - inner));
}

double CutoffPair::block(int j, double t) const {
  if (j <= -2) return 0.0;
  if (j == -1) return chi(t);
  return phi(std::ldexp(t, -j));
}

CutoffPair build_cutoffs() { return CutoffPair{}; }

bool BesovParams::satisfies_condition() const {
  const double critical = static_cast<double>(d) / p + 1.0;  // d/inf = 0
  if (s > critical + 1e-12) return !std::isinf(r);
  if (std::abs(s - critical) <= 1e-12) return !std::isinf(p) && r == 1.0;
  return false;
}

void BesovParams::validate() const {
  validate_exponent(p);
  if (std::isnan(r) || r < 1.0)
    throw std::invalid_argument("Besov summability r must lie in [1, inf], got " +
                                std::to_string(r));
  if (!std::isfinite(s)) throw std::invalid_argument("Besov regularity must be finite");
  if (d < 1) throw std::invalid_argument("dimension must be >= 1");
}

int max_block_index(const Grid& grid) {
  return static_cast<int>(std::floor(std::log2(grid.dealias_radius() / CutoffPair::kRingInner)));
}

SpectralMask block_mask(const Grid& grid, int j, const CutoffPair& cut) {
  return SpectralMask::radial(grid, [&](double t) { return cut.block(j, t); });
}

namespace {

VectorField as_vector(const ScalarField& f) { return VectorField(std::vector<ScalarField>{f}); }

}  // namespace

DyadicBlock dyadic_block(const VectorField& u, int j, const CutoffPair& cut) {
  if (j > max_block_index(u.grid())) return {VectorField(u.grid(), u.size()), true};
  if (j <= -2) return {VectorField(u.grid(), u.size()), false};
  return {block_mask(u.grid(), j, cut).apply(u), false};
}

ScalarDyadicBlock dyadic_block(const ScalarField& u, int j, const CutoffPair& cut) {
  auto b = dyadic_block(as_vector(u), j, cut);
  return {b.field[0], b.beyond_resolution};
}

VectorField LpDecomposition::reconstruct() const {
  if (blocks.empty()) throw std::logic_error("empty decomposition");
  VectorField sum(blocks.begin()->second.grid(), blocks.begin()->second.size());
  for (const auto& [j, b] : blocks) sum += b;
  return sum;
}

LpDecomposition decompose(const VectorField& u, const CutoffPair& cut) {
  LpDecomposition out;
  out.max_index = max_block_index(u.grid());
  const VectorSpectrum spec = transform_forward(u);
  for (int j = -1; j <= out.max_index; ++j)
    out.blocks.emplace(j, transform_inverse(block_mask(u.grid(), j, cut).apply(spec)));
  return out;
}

double sequence_norm(const std::vector<double>& a, double r) {
  double largest = 0.0;
  for (double x : a) largest = std::max(largest, std::abs(x));
  if (std::isinf(r) || largest == 0.0) return largest;
  double sum = 0.0;
  for (double x : a) sum += std::pow(std::abs(x) / largest, r);
  return largest * std::pow(sum, 1.0 / r);
}

std::vector<double> BlockNorms::weighted(double s) const {
  std::vector<double> a(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i) a[i] = std::exp2(s * (static_cast<double>(i) - 1.0)) * lp[i];
  return a;
}

double BlockNorms::besov(double s, double r) const { return sequence_norm(weighted(s), r); }

bool BlockNorms::under_resolved(double s) const {
  const auto a = weighted(s);
  const double largest = *std::max_element(a.begin(), a.end());
  return largest > 0.0 && a.back() > kCeilingTolerance * largest;
}

int BlockNorms::dominant_block(double s) const {
  const auto a = weighted(s);
  return static_cast<int>(std::max_element(a.begin(), a.end()) - a.begin()) - 1;
}

BlockNorms block_norms(const VectorSpectrum& u, double p, const CutoffPair& cut) {
  validate_exponent(p);
  const Grid& grid = u.grid();
  auto table = wave_table(grid);
  const auto& k = kernels::active();
  BlockNorms out;
  out.p = p;
  out.max_index = max_block_index(grid);
  out.lp.assign(out.max_index + 2, 0.0);

  RealBuffer mask(grid.spectral_count());
  Spectrum filtered(grid);
  for (int j = -1; j <= out.max_index; ++j) {
    bool any = false;
    for (std::size_t s = 0; s < mask.size(); ++s) {
      mask[s] = cut.block(j, table->radius[s]);
      any = any || mask[s] != 0.0;
    }
    if (!any) continue;
    ScalarField sq(grid);
    for (std::size_t c = 0; c < u.size(); ++c) {
      k.scale_into(filtered.coefficients().data(), u[c].coefficients().data(), mask.data(),
                   filtered.size());
      const ScalarField piece = transform_inverse(filtered);
      k.add_squares(sq.values().data(), piece.values().data(), sq.size());
    }
    if (std::isinf(p)) {
      out.lp[j + 1] = std::sqrt(std::max(0.0, k.max_value(sq.values().data(), sq.size())));
    } else {
      const double sum = k.sum_powers(sq.values().data(), p / 2.0, sq.size());
      out.lp[j + 1] = std::pow(sum * grid.cell_volume(), 1.0 / p);
    }
  }
  return out;
}

BlockNorms block_norms(const VectorField& u, double p, const CutoffPair& cut) {
  return block_norms(transform_forward(u), p, cut);
}

BlockNorms block_norms(const ScalarField& u, double p, const CutoffPair& cut) {
  return block_norms(as_vector(u), p, cut);
}

BesovNorm besov_norm(const VectorField& u, const BesovParams& params, const CutoffPair& cut) {
  params.validate();
  const BlockNorms b = block_norms(u, params.p, cut);
  return {b.besov(params.s, params.r), b.weighted(params.s), b.under_resolved(params.s)};
}

BesovNorm besov_norm(const ScalarField& u, const BesovParams& params, const CutoffPair& cut) {
  return besov_norm(as_vector(u), params, cut);
}

BesovNorm besov_norm_weak(const VectorField& u, double s, double p, const CutoffPair& cut) {
  BesovParams params{s, p, std::numeric_limits<double>::infinity(), u.grid().dim()};
  return besov_norm(u, params, cut);
}

BesovNorm besov_norm_weak(const ScalarField& u, double s, double p, const CutoffPair& cut) {
  return besov_norm_weak(as_vector(u), s, p, cut);
}

}  // namespace besov
