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

// Data-parallel inner loops shared by the spectral code. Every kernel has a
// scalar reference implementation; SIMD variants are selected at runtime and
// must agree with the reference to rounding (see tests/unit/test_kernels.cpp).
//
// Complex arrays are std::complex<double> (interleaved re, im); lengths count
// elements, not doubles.

#include <cstddef>
#include <string_view>

#include "besov/aligned.hpp"

namespace besov::kernels {

enum class Isa { scalar, avx2 };

struct Table {
  Isa isa;
  const char* name;

  // z[i] *= m[i]
  void (*scale)(Complex* z, const double* m, std::size_t n);
  // out[i] = m[i] * in[i]
  void (*scale_into)(Complex* out, const Complex* in, const double* m, std::size_t n);
  // out[i] = i * k[i] * in[i]
  void (*imag_scale_into)(Complex* out, const Complex* in, const double* k, std::size_t n);
  // acc[i] += k[i] * in[i]
  void (*accumulate_scaled)(Complex* acc, const Complex* in, const double* k, std::size_t n);
  // out[i] = v[i] - k[i] * s[i]
  void (*subtract_scaled)(Complex* out, const Complex* v, const Complex* s, const double* k,
                          std::size_t n);
  // sum_i w[i] * Re(conj(a[i]) * b[i])
  double (*weighted_dot)(const Complex* a, const Complex* b, const double* w, std::size_t n);

  // acc[i] += a[i] * b[i]
  void (*multiply_add)(double* acc, const double* a, const double* b, std::size_t n);
  // y[i] += a * x[i]
  void (*axpy)(double* y, double a, const double* x, std::size_t n);
  // acc[i] += x[i]^2
  void (*add_squares)(double* acc, const double* x, std::size_t n);
  // sum_i sq[i]^q for sq[i] >= 0; q = 1/2, 1, 2 take vector paths
  double (*sum_powers)(const double* sq, double q, std::size_t n);
  double (*max_value)(const double* x, std::size_t n);
  double (*dot)(const double* a, const double* b, std::size_t n);
};

const Table& table(Isa isa);
bool available(Isa isa);
Isa best_available();

// Process-wide selection. Initialized from BESOV_ISA ("scalar" / "avx2") when
// set, otherwise the best ISA the CPU supports.
const Table& active();
void select(Isa isa);

std::string_view to_string(Isa isa);
Isa parse_isa(std::string_view name);

}  // namespace besov::kernels
