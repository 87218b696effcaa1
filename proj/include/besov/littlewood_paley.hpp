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

#include <limits>
#include <map>
#include <vector>

#include "besov/field.hpp"
#include "besov/spectral_ops.hpp"

namespace besov {

// h(sigma) = e^{-1/sigma} / (e^{-1/sigma} + e^{-1/(1-sigma)}), a C-infinity step
// from 0 (sigma <= 0) to 1 (sigma >= 1).
double smooth_transition(double sigma);

// 1 for |t| <= inner, 0 for |t| >= outer, h((outer - |t|) / (outer - inner)) between.
double smooth_step(double t, double inner, double outer);

// Radial dyadic pair: chi(xi) = psi(|xi|) with psi = 1 on [0, 1] and 0 beyond
// 4/3, phi(xi) = chi(xi/2) - chi(xi). Then supp phi lies in the ring
// 3/4 <= |xi| <= 8/3, phi = 1 on 4/3 <= |xi| <= 2 and the dyadic sum telescopes
// to 1.
class CutoffPair {
 public:
  static constexpr double kFlatRadius = 1.0;
  static constexpr double kBallRadius = 4.0 / 3.0;
  static constexpr double kRingInner = 3.0 / 4.0;
  static constexpr double kRingOuter = 8.0 / 3.0;

  double chi(double t) const { return smooth_step(t, kFlatRadius, kBallRadius); }
  double phi(double t) const { return chi(0.5 * t) - chi(t); }

  // Multiplier of Delta_j at |xi| = t: 0 for j <= -2, chi for j = -1,
  // phi(2^-j t) for j >= 0.
  double block(int j, double t) const;
};

CutoffPair build_cutoffs();

struct BesovParams {
  double s = 2.5;
  double p = 4.0;
  double r = 2.0;
  int d = 2;

  // (s > d/p + 1, r < inf) or (s = d/p + 1, p < inf, r = 1).
  bool satisfies_condition() const;
  void validate() const;
};

// Largest dyadic index J with 2^J * 3/4 inside the dealiased band:
// J = floor(log2(dealias_radius / (3/4))).
int max_block_index(const Grid& grid);

SpectralMask block_mask(const Grid& grid, int j, const CutoffPair& cut);

struct DyadicBlock {
  VectorField field;
  // j exceeded max_block_index; the field is returned as zero.
  bool beyond_resolution = false;
};

struct ScalarDyadicBlock {
  ScalarField field;
  bool beyond_resolution = false;
};

DyadicBlock dyadic_block(const VectorField& u, int j, const CutoffPair& cut);
ScalarDyadicBlock dyadic_block(const ScalarField& u, int j, const CutoffPair& cut);

struct LpDecomposition {
  int max_index = -1;
  std::map<int, VectorField> blocks;  // j = -1 .. max_index

  VectorField reconstruct() const;
};

LpDecomposition decompose(const VectorField& u, const CutoffPair& cut);

inline constexpr double kCeilingTolerance = 1e-8;

// L^p norms of every resolved block; the Besov norms for any (s, r) follow
// without another transform.
struct BlockNorms {
  double p = 2.0;
  int max_index = -1;
  std::vector<double> lp;  // lp[j + 1] = ||Delta_j u||_{L^p}, j = -1 .. max_index

  double at(int j) const { return j < -1 || j > max_index ? 0.0 : lp[j + 1]; }
  std::vector<double> weighted(double s) const;  // 2^{js} ||Delta_j u||_{L^p}
  double besov(double s, double r) const;
  double weak(double s) const { return besov(s, std::numeric_limits<double>::infinity()); }
  // Top resolved block exceeds kCeilingTolerance of the largest weighted block.
  bool under_resolved(double s) const;
  int dominant_block(double s) const;
};

BlockNorms block_norms(const VectorSpectrum& u, double p, const CutoffPair& cut);
BlockNorms block_norms(const VectorField& u, double p, const CutoffPair& cut);
BlockNorms block_norms(const ScalarField& u, double p, const CutoffPair& cut);

struct BesovNorm {
  double value = 0.0;
  std::vector<double> sequence;  // 2^{js} ||Delta_j u||_{L^p}, j = -1 .. J
  bool under_resolved = false;
};

BesovNorm besov_norm(const VectorField& u, const BesovParams& params, const CutoffPair& cut);
BesovNorm besov_norm(const ScalarField& u, const BesovParams& params, const CutoffPair& cut);
// B^s_{p,inf}
BesovNorm besov_norm_weak(const VectorField& u, double s, double p, const CutoffPair& cut);
BesovNorm besov_norm_weak(const ScalarField& u, double s, double p, const CutoffPair& cut);

// ||(a_j)||_{l^r}, r in [1, inf].
double sequence_norm(const std::vector<double>& a, double r);

}  // namespace besov
