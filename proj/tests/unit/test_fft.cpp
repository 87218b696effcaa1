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
#include <numbers>
#include <random>

#include "besov/fft.hpp"
#include "besov/spectral_ops.hpp"
#include "oracles.hpp"

namespace besov {
namespace {

ScalarField random_field(const Grid& g, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ScalarField f(g);
  for (auto& v : f.values()) v = u(rng);
  return f;
}

TEST(Transform, ConstantFieldIsDcMode) {
  const Grid g(2, 16);
  ScalarField one(g);
  for (auto& v : one.values()) v = 1.0;
  const Spectrum s = transform_forward(one);
  for (std::size_t i = 0; i < s.size(); ++i)
    EXPECT_NEAR(std::abs(s.coefficients()[i] - Complex(i == 0 ? 1.0 : 0.0, 0.0)), 0.0, 1e-15);
}

TEST(Transform, SingleCosineHasHalfCoefficients) {
  for (std::size_t n : {8u, 16u, 64u}) {
    const Grid g(2, n);
    const double xi = 3.0 * g.wavenumber_step();
    const ScalarField f =
        ScalarField::sample(g, [xi](std::span<const double> x) { return std::cos(xi * x[0]); });
    const Spectrum s = transform_forward(f);
    const long kp[] = {3, 0}, km[] = {-3, 0};
    EXPECT_NEAR(std::abs(s.coefficient(kp) - 0.5), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(s.coefficient(km) - 0.5), 0.0, 1e-14);
    double rest = 0.0;
    for (auto c : s.coefficients()) rest += std::norm(c);
    EXPECT_NEAR(rest, 0.5, 1e-14);  // axis 0 is not halved, so both (3,0) and (-3,0) are stored
  }
}

class DirectDft : public ::testing::TestWithParam<std::tuple<int, std::size_t>> {};

TEST_P(DirectDft, MatchesBruteForceSummation) {
  const auto [dim, n] = GetParam();
  const Grid g(dim, n, 2.0 * std::numbers::pi);
  const ScalarField f = random_field(g, static_cast<unsigned>(10 * dim + n));
  const Spectrum fast = transform_forward(f);
  const auto slow = oracle::direct_dft(f.values(), dim, n);
  ASSERT_EQ(slow.size(), fast.size());
  double err = 0.0;
  for (std::size_t i = 0; i < slow.size(); ++i)
    err = std::max(err, std::abs(slow[i] - fast.coefficients()[i]));
  EXPECT_LT(err, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(SmallGrids, DirectDft,
                         ::testing::Combine(::testing::Values(1, 2, 3),
                                            ::testing::Values(8u, 16u, 32u)));

TEST(Transform, RoundTripAndParseval) {
  for (int dim : {1, 2, 3}) {
    const Grid g(dim, dim == 3 ? 16 : 64, 5.0);
    const ScalarField f = random_field(g, 3 + dim);
    const Spectrum s = transform_forward(f);
    const ScalarField back = transform_inverse(s);
    double err = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      err = std::max(err, std::abs(back[i] - f[i]));
      norm = std::max(norm, std::abs(f[i]));
    }
    EXPECT_LT(err / norm, 1e-12);
    const double l2 = lp_norm(f, 2.0);
    EXPECT_NEAR(parseval_norm(s) / l2, 1.0, 1e-12);
  }
}

TEST(Transform, RealFieldSpectrumIsHermitian) {
  const Grid g(2, 32);
  const Spectrum s = transform_forward(random_field(g, 99));
  EXPECT_LT(hermitian_defect(s), 1e-15);
  // coef(-k) = conj(coef(k)) for indices both of which live in the stored half.
  const long k[] = {5, 0}, mk[] = {-5, 0};
  EXPECT_NEAR(std::abs(s.coefficient(mk) - std::conj(s.coefficient(k))), 0.0, 1e-15);
}

TEST(Transform, InputIsNotModified) {
  const Grid g(2, 16);
  const ScalarField f = random_field(g, 5);
  const ScalarField copy = f;
  Spectrum s = transform_forward(f);
  const ScalarField back = transform_inverse(s);
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(f[i], copy[i]);
  (void)back;
}

}  // namespace
}  // namespace besov
