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

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernel_tables.hpp"

namespace besov::kernels::detail {
namespace {

void scale(Complex* z, const double* m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) z[i] *= m[i];
}

void scale_into(Complex* out, const Complex* in, const double* m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = in[i] * m[i];
}

void imag_scale_into(Complex* out, const Complex* in, const double* k, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = Complex(-k[i] * in[i].imag(), k[i] * in[i].real());
}

void accumulate_scaled(Complex* acc, const Complex* in, const double* k, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += k[i] * in[i];
}

void subtract_scaled(Complex* out, const Complex* v, const Complex* s, const double* k,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = v[i] - k[i] * s[i];
}

double weighted_dot(const Complex* a, const Complex* b, const double* w, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += w[i] * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
  return acc;
}

void multiply_add(double* acc, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += a[i] * b[i];
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void add_squares(double* acc, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i] * x[i];
}

double sum_powers(const double* sq, double q, std::size_t n) {
  double acc = 0.0;
  if (q == 1.0) {
    for (std::size_t i = 0; i < n; ++i) acc += sq[i];
  } else if (q == 2.0) {
    for (std::size_t i = 0; i < n; ++i) acc += sq[i] * sq[i];
  } else if (q == 0.5) {
    for (std::size_t i = 0; i < n; ++i) acc += std::sqrt(sq[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) acc += std::pow(sq[i], q);
  }
  return acc;
}

double max_value(const double* x, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, x[i]);
  return m;
}

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace

const Table& scalar_table() {
  static const Table t{Isa::scalar,       "scalar",          scale,
                       scale_into,        imag_scale_into,   accumulate_scaled,
                       subtract_scaled,   weighted_dot,      multiply_add,
                       axpy,              add_squares,       sum_powers,
                       max_value,         dot};
  return t;
}

}  // namespace besov::kernels::detail
