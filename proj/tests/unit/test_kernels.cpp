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
#include <random>
#include <vector>

#include "besov/kernels.hpp"

namespace besov::kernels {
namespace {

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {
 protected:
  void SetUp() override {
    if (!available(Isa::avx2)) GTEST_SKIP() << "AVX2 kernels not available on this CPU";
    std::mt19937_64 rng(17 + GetParam());
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const std::size_t n = GetParam();
    a.resize(n);
    b.resize(n);
    c.resize(n);
    m.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = {u(rng), u(rng)};
      b[i] = {u(rng), u(rng)};
      c[i] = {u(rng), u(rng)};
      m[i] = u(rng);
    }
    x.resize(n);
    y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = u(rng);
      y[i] = std::abs(u(rng));
    }
  }

  const Table& ref = table(Isa::scalar);
  const Table& simd = table(Isa::avx2);
  std::vector<Complex> a, b, c;
  std::vector<double> m, x, y;
};

void expect_same(const std::vector<Complex>& p, const std::vector<Complex>& q) {
  ASSERT_EQ(p.size(), q.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_NEAR(p[i].real(), q[i].real(), 1e-14) << i;
    EXPECT_NEAR(p[i].imag(), q[i].imag(), 1e-14) << i;
  }
}

void expect_same(const std::vector<double>& p, const std::vector<double>& q) {
  ASSERT_EQ(p.size(), q.size());
  for (std::size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(p[i], q[i], 1e-14) << i;
}

TEST_P(KernelEquivalence, ComplexMultipliers) {
  const std::size_t n = GetParam();
  auto p = a, q = a;
  ref.scale(p.data(), m.data(), n);
  simd.scale(q.data(), m.data(), n);
  expect_same(p, q);

  std::vector<Complex> p2(n), q2(n);
  ref.scale_into(p2.data(), a.data(), m.data(), n);
  simd.scale_into(q2.data(), a.data(), m.data(), n);
  expect_same(p2, q2);

  ref.imag_scale_into(p2.data(), a.data(), m.data(), n);
  simd.imag_scale_into(q2.data(), a.data(), m.data(), n);
  expect_same(p2, q2);
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_NEAR(p2[i].real(), -m[i] * a[i].imag(), 1e-14);
    EXPECT_NEAR(p2[i].imag(), m[i] * a[i].real(), 1e-14);
  }

  p = b;
  q = b;
  ref.accumulate_scaled(p.data(), a.data(), m.data(), n);
  simd.accumulate_scaled(q.data(), a.data(), m.data(), n);
  expect_same(p, q);

  ref.subtract_scaled(p2.data(), a.data(), b.data(), m.data(), n);
  simd.subtract_scaled(q2.data(), a.data(), b.data(), m.data(), n);
  expect_same(p2, q2);
}

TEST_P(KernelEquivalence, Reductions) {
  const std::size_t n = GetParam();
  const double tol = 1e-12 * (1.0 + static_cast<double>(n));
  EXPECT_NEAR(ref.weighted_dot(a.data(), b.data(), y.data(), n),
              simd.weighted_dot(a.data(), b.data(), y.data(), n), tol);
  EXPECT_NEAR(ref.dot(x.data(), m.data(), n), simd.dot(x.data(), m.data(), n), tol);
  EXPECT_EQ(ref.max_value(x.data(), n), simd.max_value(x.data(), n));
  for (double q : {0.5, 1.0, 1.5, 2.0, 3.0}) {
    const double r = ref.sum_powers(y.data(), q, n);
    EXPECT_NEAR(r, simd.sum_powers(y.data(), q, n), tol * (1.0 + std::abs(r))) << "q=" << q;
  }
}

TEST_P(KernelEquivalence, RealUpdates) {
  const std::size_t n = GetParam();
  auto p = y, q = y;
  ref.multiply_add(p.data(), x.data(), m.data(), n);
  simd.multiply_add(q.data(), x.data(), m.data(), n);
  expect_same(p, q);
  p = y;
  q = y;
  ref.axpy(p.data(), -0.75, x.data(), n);
  simd.axpy(q.data(), -0.75, x.data(), n);
  expect_same(p, q);
  p = y;
  q = y;
  ref.add_squares(p.data(), x.data(), n);
  simd.add_squares(q.data(), x.data(), n);
  expect_same(p, q);
}

// Lengths straddle the vector width and the unrolled tails.
INSTANTIATE_TEST_SUITE_P(Lengths, KernelEquivalence,
                         ::testing::Values(0, 1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 64, 1001));

TEST(KernelDispatch, ParseAndSelect) {
  EXPECT_EQ(parse_isa("scalar"), Isa::scalar);
  EXPECT_EQ(parse_isa("avx2"), Isa::avx2);
  EXPECT_THROW(parse_isa("sse9"), std::invalid_argument);
  EXPECT_EQ(to_string(Isa::scalar), "scalar");
  const Isa before = active().isa;
  select(Isa::scalar);
  EXPECT_EQ(active().isa, Isa::scalar);
  select(before);
  EXPECT_EQ(active().isa, before);
  EXPECT_TRUE(available(Isa::scalar));
  EXPECT_TRUE(available(best_available()));
}

TEST(KernelDispatch, MaxOfEmptyAndPowersOfZeros) {
  const Table& t = table(Isa::scalar);
  std::vector<double> zeros(13, 0.0);
  EXPECT_EQ(t.sum_powers(zeros.data(), 0.5, zeros.size()), 0.0);
  EXPECT_EQ(t.max_value(zeros.data(), zeros.size()), 0.0);
}

}  // namespace
}  // namespace besov::kernels
