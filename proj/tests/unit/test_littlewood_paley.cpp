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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "besov/fft.hpp"
#include "besov/littlewood_paley.hpp"
#include "oracles.hpp"

namespace besov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ScalarField band_limited(const Grid& g, unsigned seed, double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ScalarField f(g);
  for (auto& v : f.values()) v = u(rng);
  return SpectralMask::radial(g, [radius](double t) { return t < radius ? 1.0 : 0.0; }).apply(f);
}

VectorField band_limited_vector(const Grid& g, unsigned seed, double radius) {
  std::vector<ScalarField> c;
  for (int i = 0; i < g.dim(); ++i) c.push_back(band_limited(g, seed * 7 + i, radius));
  return VectorField(std::move(c));
}

TEST(Cutoffs, MatchIndependentFormula) {
  const CutoffPair cut = build_cutoffs();
  for (int i = 0; i <= 4000; ++i) {
    const double t = 3.0 * i / 4000.0;
    EXPECT_NEAR(cut.chi(t), oracle::bump(t, 1.0, 4.0 / 3.0), 1e-15);
    for (int j = -2; j <= 3; ++j) EXPECT_NEAR(cut.block(j, t * 4.0), oracle::block_multiplier(j, t * 4.0), 1e-15);
  }
}

TEST(Cutoffs, SupportsPlateauAndRange) {
  const CutoffPair cut = build_cutoffs();
  EXPECT_EQ(cut.chi(0.0), 1.0);
  EXPECT_EQ(cut.phi(0.0), 0.0);
  EXPECT_EQ(cut.chi(1.4), 0.0);
  EXPECT_EQ(cut.phi(1.4), 1.0);
  for (int i = 0; i <= 100000; ++i) {
    const double t = 3.0 * i / 100000.0;
    const double c = cut.chi(t), p = cut.phi(t);
    ASSERT_GE(c, 0.0);
    ASSERT_LE(c, 1.0);
    ASSERT_GE(p, 0.0);
    ASSERT_LE(p, 1.0);
    if (t >= 4.0 / 3.0) {
      ASSERT_EQ(c, 0.0) << t;
    }
    if (t <= 0.75 || t >= 8.0 / 3.0) {
      ASSERT_EQ(p, 0.0) << t;
    }
    if (t >= 4.0 / 3.0 && t <= 2.0) {
      ASSERT_EQ(p, 1.0) << t;
    }
  }
}

TEST(Cutoffs, PartitionOfUnityAgainstTelescopingOracle) {
  const CutoffPair cut = build_cutoffs();
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    // random xi in the 2D ball of radius 100
    double x, y;
    do {
      x = u(rng);
      y = u(rng);
    } while (x * x + y * y > 1.0);
    const double t = 100.0 * std::hypot(x, y);
    double sum = cut.chi(t);
    for (int j = 0; j <= 8; ++j) sum += cut.phi(std::ldexp(t, -j));
    ASSERT_NEAR(sum, 1.0, 1e-12);
    ASSERT_NEAR(sum, oracle::bump(std::ldexp(t, -9), 1.0, 4.0 / 3.0), 1e-12);
  }
}

TEST(Params, ConditionFlag) {
  EXPECT_TRUE((BesovParams{2.5, 4.0, 2.0, 2}).satisfies_condition());
  EXPECT_TRUE((BesovParams{3.0, 1.0, 1.0, 2}).satisfies_condition());
  EXPECT_FALSE((BesovParams{3.0, 1.0, 2.0, 2}).satisfies_condition());
  EXPECT_FALSE((BesovParams{2.5, 4.0, kInf, 2}).satisfies_condition());
  EXPECT_TRUE((BesovParams{1.5, kInf, 1.0, 2}).satisfies_condition());
  EXPECT_FALSE((BesovParams{1.0, kInf, 1.0, 2}).satisfies_condition());
  EXPECT_THROW((BesovParams{2.5, 0.5, 2.0, 2}).validate(), std::invalid_argument);
  EXPECT_THROW((BesovParams{2.5, 2.0, 0.5, 2}).validate(), std::invalid_argument);
}

TEST(Blocks, MaxIndexForPowerOfTwoGrids) {
  for (int m = 8; m <= 11; ++m) EXPECT_EQ(max_block_index(Grid(2, std::size_t{1} << m)), m - 5);
}

TEST(Blocks, ZeroAndOutOfRangeIndices) {
  const CutoffPair cut = build_cutoffs();
  const Grid g(2, 32, 2.0 * std::numbers::pi);
  const VectorField u = band_limited_vector(g, 3, 8.0);
  EXPECT_EQ(max_magnitude(dyadic_block(u, -2, cut).field), 0.0);
  const DyadicBlock high = dyadic_block(u, max_block_index(g) + 1, cut);
  EXPECT_TRUE(high.beyond_resolution);
  EXPECT_EQ(max_magnitude(high.field), 0.0);
  const VectorField zero(g, 2);
  for (int j = -1; j <= max_block_index(g); ++j)
    EXPECT_EQ(max_magnitude(dyadic_block(zero, j, cut).field), 0.0);
}

TEST(Blocks, SpectralSupportAndNearOrthogonality) {
  const CutoffPair cut = build_cutoffs();
  const Grid g(2, 64, 2.0 * std::numbers::pi);
  const VectorField u = band_limited_vector(g, 5, 20.0);
  auto table = wave_table(g);
  const double total = parseval_norm(transform_forward(u));
  for (int j = 0; j <= max_block_index(g); ++j) {
    const VectorSpectrum b = transform_forward(dyadic_block(u, j, cut).field);
    double outside = 0.0;
    for (std::size_t c = 0; c < b.size(); ++c)
      for (std::size_t s = 0; s < b[c].size(); ++s) {
        const double t = table->radius[s];
        if (t < 0.75 * std::ldexp(1.0, j) || t > 8.0 / 3.0 * std::ldexp(1.0, j))
          outside = std::max(outside, std::abs(b[c].coefficients()[s]));
      }
    EXPECT_LT(outside, 1e-14 * total) << j;
    for (int k = j + 2; k <= max_block_index(g); ++k) {
      const VectorField twice = dyadic_block(dyadic_block(u, j, cut).field, k, cut).field;
      EXPECT_LT(max_magnitude(twice), 1e-14 * max_magnitude(u)) << j << "," << k;
    }
  }
}

TEST(Blocks, ReconstructionOfBandLimitedField) {
  const CutoffPair cut = build_cutoffs();
  const Grid g(2, 64, 2.0 * std::numbers::pi);
  const int J = max_block_index(g);
  const VectorField u = band_limited_vector(g, 9, 0.75 * std::ldexp(1.0, J + 1));
  const LpDecomposition dec = decompose(u, cut);
  EXPECT_EQ(dec.max_index, J);
  EXPECT_LT(lp_norm(dec.reconstruct() - u, 2.0), 1e-12 * lp_norm(u, 2.0));
}

TEST(Besov, SingleModeEqualsOneBlock) {
  const CutoffPair cut = build_cutoffs();
  const Grid g(2, 512);
  // |xi| = 1.5 * 2^3 is inside the dealiased band (14.2) and sits in the phi = 1 part of block 3.
  const long k = static_cast<long>(std::lround(12.0 / g.wavenumber_step()));
  const double xi = static_cast<double>(k) * g.wavenumber_step();
  ASSERT_NEAR(xi, 12.0, 1e-12);
  std::vector<ScalarField> c;
  c.push_back(ScalarField::sample(g, [xi](std::span<const double> x) { return std::cos(xi * x[1]); }));
  c.push_back(ScalarField(g));
  const VectorField u(std::move(c));
  for (const BesovParams params : {BesovParams{2.5, 4.0, 2.0, 2}, BesovParams{3.0, 1.0, 1.0, 2},
                                   BesovParams{1.2, kInf, 1.0, 2}}) {
    const double expect = std::pow(2.0, 3.0 * params.s) * lp_norm(u, params.p);
    EXPECT_NEAR(besov_norm(u, params, cut).value / expect, 1.0, 1e-12);
    EXPECT_NEAR(besov_norm_weak(u, params.s, params.p, cut).value / expect, 1.0, 1e-12);
  }
}

TEST(Besov, HomogeneityMonotonicityAndTriangle) {
  const CutoffPair cut = build_cutoffs();
  const Grid g(2, 64, 2.0 * std::numbers::pi);
  for (unsigned t = 0; t < 100; ++t) {
    const VectorField u = band_limited_vector(g, 2 * t, 18.0);
    const VectorField v = band_limited_vector(g, 2 * t + 1, 18.0);
    const BesovParams prm{2.5, 4.0, 2.0, 2};
    const double nu = besov_norm(u, prm, cut).value;
    EXPECT_NEAR(besov_norm(-3.0 * u, prm, cut).value, 3.0 * nu, 1e-12 * nu);
    EXPECT_LE(besov_norm(u + v, prm, cut).value, nu + besov_norm(v, prm, cut).value + 1e-10);
    double previous = kInf;
    for (double r : {1.0, 1.5, 2.0, 4.0, kInf}) {
      const double n = besov_norm(u, BesovParams{2.5, 4.0, r, 2}, cut).value;
      EXPECT_LE(n, previous * (1.0 + 1e-15));
      previous = n;
    }
    EXPECT_LE(besov_norm_weak(u, 2.5, 4.0, cut).value, nu * (1.0 + 1e-15));
  }
  const VectorField zero(g, 2);
  EXPECT_EQ(besov_norm_weak(zero, 2.5, 4.0, cut).value, 0.0);
}

TEST(Besov, StableUnderGridRefinement) {
  const CutoffPair cut = build_cutoffs();
  const Grid coarse(2, 32, 2.0 * std::numbers::pi);
  const Grid fine(2, 64, 2.0 * std::numbers::pi);
  // Low-order trigonometric field sampled on both grids.
  auto make = [](const Grid& g) {
    std::vector<ScalarField> c;
    c.push_back(ScalarField::sample(g, [](std::span<const double> x) {
      return std::sin(2 * x[0]) * std::cos(3 * x[1]) + 0.2 * std::cos(5 * x[0] + x[1]);
    }));
    c.push_back(ScalarField::sample(g, [](std::span<const double> x) {
      return std::cos(x[0] - 4 * x[1]) - 0.5 * std::sin(6 * x[1]);
    }));
    return VectorField(std::move(c));
  };
  for (double p : {2.0, 4.0}) {
    const BesovParams prm{2.5, p, 2.0, 2};
    const double a = besov_norm(make(coarse), prm, cut).value;
    const double b = besov_norm(make(fine), prm, cut).value;
    EXPECT_NEAR(a / b, 1.0, p == 2.0 ? 1e-12 : 1e-10) << p;
  }
}

TEST(Besov, FlagsEnergyAtTheTopBlock) {
  const CutoffPair cut = build_cutoffs();
  const Grid g(2, 32, 2.0 * std::numbers::pi);
  const VectorField rough = band_limited_vector(g, 1, 1e9);
  EXPECT_TRUE(besov_norm(rough, BesovParams{}, cut).under_resolved);
  const VectorField smooth = band_limited_vector(g, 1, 2.0);
  EXPECT_FALSE(besov_norm(smooth, BesovParams{}, cut).under_resolved);
}

TEST(Besov, SequenceNorm) {
  EXPECT_DOUBLE_EQ(sequence_norm({3.0, 4.0}, 2.0), 5.0);
  EXPECT_DOUBLE_EQ(sequence_norm({3.0, 4.0}, 1.0), 7.0);
  EXPECT_DOUBLE_EQ(sequence_norm({3.0, 4.0}, kInf), 4.0);
  EXPECT_DOUBLE_EQ(sequence_norm({0.0, 0.0}, 2.0), 0.0);
  EXPECT_NEAR(sequence_norm({1e-300, 1e-300}, 2.0), std::sqrt(2.0) * 1e-300, 1e-314);
}

}  // namespace
}  // namespace besov
