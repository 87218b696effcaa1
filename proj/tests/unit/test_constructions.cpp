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
#include <map>
#include <memory>
#include <numbers>

#include "besov/constructions.hpp"
#include "besov/experiments/commands.hpp"
#include "besov/fft.hpp"
#include "besov/spectral_ops.hpp"
#include "oracles.hpp"

namespace besov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kS = 2.5;

struct Level {
  Grid grid;
  PhiProfile prof;
  DatumFamily fam;
};

const Level& level(int n) {
  static std::map<int, std::unique_ptr<Level>> cache;
  auto& slot = cache[n];
  if (!slot) {
    Grid g(2, required_points(n));
    PhiProfile prof = build_phi_profile(2, line_grid(g));
    DatumFamily fam = build_family(n, kS, 2, g, prof);
    slot = std::make_unique<Level>(Level{g, std::move(prof), std::move(fam)});
  }
  return *slot;
}

double rel(const VectorField& a, const VectorField& b) { return lp_norm(a - b, 2.0) / lp_norm(b, 2.0); }

TEST(Resolution, RequiredPointsAndErrors) {
  EXPECT_EQ(required_points(2), 256u);
  EXPECT_EQ(required_points(3), 512u);
  EXPECT_EQ(required_points(4), 1024u);
  EXPECT_EQ(required_points(5), 2048u);
  EXPECT_THROW(require_resolved(Grid(2, 128), 2), ResolutionError);
  EXPECT_NO_THROW(require_resolved(Grid(2, 256), 2));
  EXPECT_EQ(lattice_index(Grid(1, 256), carrier_frequency(3)), 17 * 8);
  EXPECT_THROW(lattice_index(Grid(1, 256, 20.0), carrier_frequency(3)), ConstructionError);
}

TEST(Profile, Invariants) {
  for (int d : {1, 2, 3}) {
    const Grid line(1, 256);
    const PhiProfile prof = build_phi_profile(d, line);
    EXPECT_EQ(prof.hat(0.0), 1.0);
    EXPECT_EQ(prof.hat(std::pow(4.0, -d)), 1.0);
    EXPECT_EQ(prof.hat(std::pow(2.0, -d)), 0.0);
    EXPECT_EQ(prof.hat(-0.3 * std::pow(2.0, -d)), prof.hat(0.3 * std::pow(2.0, -d)));
    // phi(0) = (1/L) sum_k phi_hat(xi_k)
    double sum = 0.0;
    for (auto c : prof.coef) sum += c.real();
    EXPECT_NEAR(prof.center, sum, 1e-15);
    EXPECT_GT(prof.center, 0.0);
    EXPECT_GE(prof.sup_norm, prof.center);
    EXPECT_GT(prof.delta, 0.0);
    for (std::size_t i = 0; i < line.n(); ++i) {
      const double x = line.coordinate(i);
      const double dist = std::min(x, line.length() - x);
      if (dist <= prof.delta) {
        EXPECT_GE(prof.phi[i], 0.5 * prof.sup_norm);
      }
      EXPECT_NEAR(prof.phi[i], prof.phi[(line.n() - i) % line.n()], 1e-15);  // even
    }
  }
}

TEST(Profile, MatchesDirectCosineSum) {
  const Grid line(1, 512);
  const PhiProfile prof = build_phi_profile(2, line);
  const oracle::Profile ref(2, line.length());
  EXPECT_EQ(ref.xi.size(), prof.support_samples);
  for (std::size_t i = 0; i < line.n(); i += 7) {
    const double x = line.coordinate(i);
    EXPECT_NEAR(prof.phi[i], ref.value(x), 1e-15);
    EXPECT_NEAR(prof.phi_d1[i], ref.d1(x), 1e-15);
    EXPECT_NEAR(prof.phi_d2[i], ref.d2(x), 1e-15);
  }
}

TEST(Profile, TooCoarseLatticeIsRejected) {
  EXPECT_THROW(build_phi_profile(2, Grid(1, 64, 2.0 * std::numbers::pi)), ResolutionError);
  const PhiProfile coarse = build_phi_profile(3, Grid(1, 128));
  EXPECT_TRUE(coarse.coarse_support);
  EXPECT_FALSE(build_phi_profile(1, Grid(1, 128)).coarse_support);
}

TEST(HighFrequency, DivergenceFreeAndProjectionInvariant) {
  for (int n : {2, 3}) {
    const Level& lv = level(n);
    EXPECT_LT(relative_divergence(lv.fam.f), 1e-12);
    EXPECT_LT(rel(leray_project(lv.fam.f), lv.fam.f), 1e-12);
    EXPECT_LT(relative_divergence(lv.fam.g), 1e-12);
  }
}

TEST(HighFrequency, SingleBlockAndSpectralSupport) {
  const CutoffPair cut = build_cutoffs();
  for (int n : {2, 3}) {
    const Level& lv = level(n);
    for (int j = -1; j <= max_block_index(lv.grid); ++j) {
      const VectorField b = dyadic_block(lv.fam.f, j, cut).field;
      if (j == n)
        EXPECT_LT(rel(b, lv.fam.f), 1e-14);
      else
        EXPECT_LT(lp_norm(b, 2.0), 1e-14 * lp_norm(lv.fam.f, 2.0)) << "j=" << j;
    }
    EXPECT_LT(rel(dyadic_block(lv.fam.g, -1, cut).field, lv.fam.g), 1e-14);
    const double w = carrier_frequency(n);
    const VectorSpectrum fs = transform_forward(lv.fam.f);
    const VectorSpectrum gs = transform_forward(lv.fam.g);
    auto table = wave_table(lv.grid);
    double f_out = 0.0, g_out = 0.0, f_max = 0.0, g_max = 0.0;
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t s = 0; s < fs[c].size(); ++s) {
        const double t = table->radius[s];
        if (t < w - 0.5 || t > w + 0.5) f_out = std::max(f_out, std::abs(fs[c].coefficients()[s]));
        if (t > 0.5) g_out = std::max(g_out, std::abs(gs[c].coefficients()[s]));
        f_max = std::max(f_max, std::abs(fs[c].coefficients()[s]));
        g_max = std::max(g_max, std::abs(gs[c].coefficients()[s]));
      }
    // sampled then transformed: only round-off outside the stated support
    EXPECT_LT(f_out, 1e-14 * f_max);
    EXPECT_LT(g_out, 1e-14 * g_max);
    EXPECT_LT(hermitian_defect(fs[0]), 1e-13);
    EXPECT_LT(hermitian_defect(gs[1]), 1e-13);
  }
}

TEST(HighFrequency, NormRatiosAcrossLevels) {
  const CutoffPair cut = build_cutoffs();
  for (double sigma : {kS - 1.0, kS, kS + 1.0}) {
    for (int n : {2, 3}) {
      const BesovParams a{sigma, 4.0, 2.0, 2};
      const double lo = besov_norm(level(n).fam.f, a, cut).value;
      const double hi = besov_norm(level(n + 1).fam.f, a, cut).value;
      EXPECT_NEAR(std::log2(lo) - std::log2(hi), kS - sigma, 0.05) << sigma << " " << n;
    }
  }
}

TEST(LowFrequency, HalvesPerLevel) {
  const CutoffPair cut = build_cutoffs();
  const Grid g(2, 256);
  const PhiProfile prof = build_phi_profile(2, line_grid(g));
  for (int n : {2, 3, 4, 5}) {
    const VectorField a = build_g_n(n, 2, g, prof);
    const VectorField b = build_g_n(n + 1, 2, g, prof);
    const BesovParams prm{kS, 4.0, 2.0, 2};
    EXPECT_NEAR(besov_norm(b, prm, cut).value / besov_norm(a, prm, cut).value, 0.5, 1e-10);
  }
}

TEST(Product, MatchesExpandedComponentFormulas) {
  const CutoffPair cut = build_cutoffs();
  for (int n : {2, 3}) {
    const Level& lv = level(n);
    const ProductLowerBound lb = product_lower_bound(n, BesovParams{}, lv.fam, cut);
    const oracle::Profile ref(2, lv.grid.length());
    double err = 0.0, scale = 0.0;
    std::vector<std::size_t> idx(2);
    for (std::size_t i = 0; i < lv.grid.point_count(); i += 3) {
      lv.grid.unflatten_physical(i, idx);
      const auto pc = oracle::product_components(ref, n, kS, lv.grid.coordinate(idx[0]),
                                                 lv.grid.coordinate(idx[1]));
      err = std::max({err, std::abs(lb.product[0][i] - pc.first), std::abs(lb.product[1][i] - pc.second)});
      scale = std::max({scale, std::abs(pc.first), std::abs(pc.second)});
    }
    EXPECT_LT(err / scale, 1e-8) << n;
    const VectorField closed = closed_form_product(n, kS, 2, lv.grid, lv.prof);
    EXPECT_LT(lp_norm(closed - lb.product, kInf) / lp_norm(lb.product, kInf), 1e-8);
  }
}

TEST(Product, SingleBlockIdentityAndComponentDecay) {
  const CutoffPair cut = build_cutoffs();
  const BesovParams prm{kS, 4.0, 2.0, 2};
  std::vector<double> comp1;
  for (int n : {2, 3, 4}) {
    const Level& lv = level(n);
    const ProductLowerBound lb = product_lower_bound(n, prm, lv.fam, cut);
    EXPECT_EQ(lb.populated_block, n);
    EXPECT_LT(lb.leakage, 1e-10);
    EXPECT_NEAR(lb.weak_norm / (std::pow(2.0, n * kS) * lp_norm(lb.product, 4.0)), 1.0, 1e-12);
    comp1.push_back(lb.component_weak_norms[0]);
  }
  EXPECT_NEAR(comp1[1] / comp1[0], 0.5, 0.1);
  EXPECT_NEAR(comp1[2] / comp1[1], 0.5, 0.1);
}

TEST(Product, TrailingComponentsVanishInThreeDimensions) {
  const Grid g(3, 128);
  const PhiProfile prof = build_phi_profile(3, line_grid(g));
  const VectorField f = build_f_n(0, kS, 3, g, prof);
  const VectorField gl = build_g_n(0, 3, g, prof);
  EXPECT_LT(relative_divergence(f), 1e-12);
  const VectorField prod = advective_term(gl, f).value;
  EXPECT_EQ(max_magnitude(VectorField(std::vector<ScalarField>{prod[2]})), 0.0);
  EXPECT_GT(max_magnitude(prod), 0.0);
}

TEST(Product, LeakageOutsideTheBlockIsAnError) {
  // n = 0 in d = 2: the carrier 17/12 sits near the edge of the phi = 1 ring and
  // the product spreads below 4/3.
  const Grid g(2, 128);
  const PhiProfile prof = build_phi_profile(2, line_grid(g));
  const DatumFamily fam = build_family(0, kS, 2, g, prof);
  EXPECT_THROW(product_lower_bound(0, BesovParams{}, fam, build_cutoffs()), ConstructionError);
}

TEST(AveragedProfile, PlateauAgainstAveragingOracle) {
  const Grid line(1, required_points(8));
  const PhiProfile prof = build_phi_profile(2, line);
  double phi4 = 0.0, phi8 = 0.0;
  for (double v : prof.phi.values()) {
    phi4 += std::pow(v, 4);
    phi8 += std::pow(v, 8);
  }
  phi4 *= line.spacing();
  phi8 *= line.spacing();

  const double v7 = lemma_m_value(2.0, 7, prof, line);
  const double v8 = lemma_m_value(2.0, 8, prof, line);
  EXPECT_LT(std::abs(v7 - v8) / v8, 0.01);
  EXPECT_NEAR(v8 / std::sqrt(phi4 * oracle::cosine_average(2.0)), 1.0, 0.02);
  EXPECT_NEAR(oracle::cosine_average(2.0), 0.5, 1e-12);

  const double w8 = lemma_m_value(4.0, 8, prof, line);
  EXPECT_NEAR(oracle::cosine_average(4.0), 3.0 / 8.0, 1e-12);
  EXPECT_NEAR(w8 / std::pow(phi8 * oracle::cosine_average(4.0), 0.25), 1.0, 0.02);
  EXPECT_NEAR(cosine_power_average(1.0), oracle::cosine_average(1.0), 1e-10);
  EXPECT_NEAR(cosine_power_average(3.0), oracle::cosine_average(3.0), 1e-10);

  for (double p : {1.0, 2.0, 4.0, kInf})
    for (int n = 1; n <= 8; ++n) EXPECT_GT(lemma_m_value(p, n, prof, line), 0.0);
  EXPECT_THROW(lemma_m_value(2.0, 9, prof, line), ResolutionError);
}

TEST(DataFamily, ScalingProperties) {
  experiments::ExperimentConfig cfg;
  cfg.n_list = {2, 3, 4};
  const auto res = experiments::cmd_norm_scaling(cfg);
  const auto& t = res.table("norm_scaling");
  const std::vector<double> ns{2, 3, 4};
  auto slope = [&](const char* col) { return oracle::log2_fit(ns, t.column(col)).slope; };
  EXPECT_NEAR(slope("u0_below"), -1.0, 0.1);
  EXPECT_NEAR(slope("u0"), 0.0, 0.1);
  EXPECT_NEAR(slope("u0_above"), 1.0, 0.1);
  EXPECT_LE(slope("v0_below"), -0.9);
  EXPECT_LE(slope("v0_above"), 1.1);
  EXPECT_LE(slope("qv0_below"), -0.9);
  EXPECT_LE(slope("ff"), -(kS - 1.0) + 0.1);
  EXPECT_LE(slope("fg"), -0.9);
  EXPECT_LE(slope("q_gf"), -0.9);
  EXPECT_LE(slope("gg"), -1.9);
  EXPECT_TRUE(res.passed());
}

}  // namespace
}  // namespace besov
