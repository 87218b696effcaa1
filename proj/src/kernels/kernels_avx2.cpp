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

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernel_tables.hpp"

namespace besov::kernels::detail {
namespace {

// Two complex numbers per __m256d: (re0, im0, re1, im1). A real multiplier
// pair (m0, m1) is widened to (m0, m0, m1, m1).
inline __m256d widen_pair(const double* m) {
  const __m256d v = _mm256_castpd128_pd256(_mm_loadu_pd(m));
  return _mm256_permute4x64_pd(v, 0x50);
}

inline double horizontal_sum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double* as_doubles(Complex* z) { return reinterpret_cast<double*>(z); }
inline const double* as_doubles(const Complex* z) { return reinterpret_cast<const double*>(z); }

void scale(Complex* z, const double* m, std::size_t n) {
  double* d = as_doubles(z);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(d + 2 * i);
    _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(v, widen_pair(m + i)));
  }
  for (; i < n; ++i) z[i] *= m[i];
}

void scale_into(Complex* out, const Complex* in, const double* m, std::size_t n) {
  double* o = as_doubles(out);
  const double* a = as_doubles(in);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(a + 2 * i);
    _mm256_storeu_pd(o + 2 * i, _mm256_mul_pd(v, widen_pair(m + i)));
  }
  for (; i < n; ++i) out[i] = in[i] * m[i];
}

void imag_scale_into(Complex* out, const Complex* in, const double* k, std::size_t n) {
  double* o = as_doubles(out);
  const double* a = as_doubles(in);
  // i*k*(x + iy) = (-k y, k x): swap within each complex, negate the real slot.
  const __m256d sign = _mm256_set_pd(1.0, -1.0, 1.0, -1.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_permute_pd(_mm256_loadu_pd(a + 2 * i), 0x5);
    const __m256d kk = _mm256_mul_pd(widen_pair(k + i), sign);
    _mm256_storeu_pd(o + 2 * i, _mm256_mul_pd(v, kk));
  }
  for (; i < n; ++i) out[i] = Complex(-k[i] * in[i].imag(), k[i] * in[i].real());
}

void accumulate_scaled(Complex* acc, const Complex* in, const double* k, std::size_t n) {
  double* o = as_doubles(acc);
  const double* a = as_doubles(in);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d r = _mm256_fmadd_pd(_mm256_loadu_pd(a + 2 * i), widen_pair(k + i),
                                      _mm256_loadu_pd(o + 2 * i));
    _mm256_storeu_pd(o + 2 * i, r);
  }
  for (; i < n; ++i) acc[i] += k[i] * in[i];
}

void subtract_scaled(Complex* out, const Complex* v, const Complex* s, const double* k,
                     std::size_t n) {
  double* o = as_doubles(out);
  const double* a = as_doubles(v);
  const double* b = as_doubles(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d r = _mm256_fnmadd_pd(_mm256_loadu_pd(b + 2 * i), widen_pair(k + i),
                                       _mm256_loadu_pd(a + 2 * i));
    _mm256_storeu_pd(o + 2 * i, r);
  }
  for (; i < n; ++i) out[i] = v[i] - k[i] * s[i];
}

double weighted_dot(const Complex* a, const Complex* b, const double* w, std::size_t n) {
  const double* x = as_doubles(a);
  const double* y = as_doubles(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d prod = _mm256_mul_pd(_mm256_loadu_pd(x + 2 * i), _mm256_loadu_pd(y + 2 * i));
    acc = _mm256_fmadd_pd(prod, widen_pair(w + i), acc);
  }
  double total = horizontal_sum(acc);
  for (; i < n; ++i) total += w[i] * (a[i].real() * b[i].real() + a[i].imag() * b[i].imag());
  return total;
}

void multiply_add(double* acc, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r =
        _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), _mm256_loadu_pd(acc + i));
    _mm256_storeu_pd(acc + i, r);
  }
  for (; i < n; ++i) acc[i] += a[i] * b[i];
}

void axpy(double* y, double a, const double* x, std::size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

void add_squares(double* acc, const double* x, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(acc + i, _mm256_fmadd_pd(v, v, _mm256_loadu_pd(acc + i)));
  }
  for (; i < n; ++i) acc[i] += x[i] * x[i];
}

double sum_powers(const double* sq, double q, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  double tail = 0.0;
  if (q == 1.0) {
    for (; i + 8 <= n; i += 8) {
      acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(sq + i));
      acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(sq + i + 4));
    }
    for (; i < n; ++i) tail += sq[i];
  } else if (q == 2.0) {
    for (; i + 8 <= n; i += 8) {
      const __m256d a = _mm256_loadu_pd(sq + i);
      const __m256d b = _mm256_loadu_pd(sq + i + 4);
      acc0 = _mm256_fmadd_pd(a, a, acc0);
      acc1 = _mm256_fmadd_pd(b, b, acc1);
    }
    for (; i < n; ++i) tail += sq[i] * sq[i];
  } else if (q == 0.5) {
    for (; i + 8 <= n; i += 8) {
      acc0 = _mm256_add_pd(acc0, _mm256_sqrt_pd(_mm256_loadu_pd(sq + i)));
      acc1 = _mm256_add_pd(acc1, _mm256_sqrt_pd(_mm256_loadu_pd(sq + i + 4)));
    }
    for (; i < n; ++i) tail += std::sqrt(sq[i]);
  } else {
    for (; i < n; ++i) tail += std::pow(sq[i], q);
  }
  return horizontal_sum(_mm256_add_pd(acc0, acc1)) + tail;
}

double max_value(const double* x, std::size_t n) {
  __m256d m = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) m = _mm256_max_pd(m, _mm256_loadu_pd(x + i));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double r = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; i < n; ++i) r = std::max(r, x[i]);
  return r;
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  double total = horizontal_sum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += a[i] * b[i];
  return total;
}

}  // namespace

const Table& avx2_table() {
  static const Table t{Isa::avx2,         "avx2",            scale,
                       scale_into,        imag_scale_into,   accumulate_scaled,
                       subtract_scaled,   weighted_dot,      multiply_add,
                       axpy,              add_squares,       sum_powers,
                       max_value,         dot};
  return t;
}

}  // namespace besov::kernels::detail
