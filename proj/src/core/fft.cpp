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

#include "besov/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "besov/kernels.hpp"

namespace besov {
namespace {

// FFTW plans for one grid shape, planned on scratch buffers that share the
// allocator's alignment and executed through the new-array interface.
class PlanPair {
 public:
  explicit PlanPair(const Grid& grid) {
    std::vector<int> dims(grid.dim(), static_cast<int>(grid.n()));
    RealBuffer real(grid.point_count());
    ComplexBuffer spec(grid.spectral_count());
    auto* r = real.data();
    auto* c = reinterpret_cast<fftw_complex*>(spec.data());
    forward_ = fftw_plan_dft_r2c(grid.dim(), dims.data(), r, c, FFTW_ESTIMATE);
    inverse_ = fftw_plan_dft_c2r(grid.dim(), dims.data(), c, r, FFTW_ESTIMATE);
  }
  ~PlanPair() {
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(inverse_);
  }
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;

  void forward(double* in, Complex* out) const {
    fftw_execute_dft_r2c(forward_, in, reinterpret_cast<fftw_complex*>(out));
  }
  void inverse(Complex* in, double* out) const {
    fftw_execute_dft_c2r(inverse_, reinterpret_cast<fftw_complex*>(in), out);
  }

 private:
  fftw_plan forward_{};
  fftw_plan inverse_{};
};

// The FFTW planner is not reentrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<const PlanPair> plans_for(const Grid& grid) {
  using Key = std::tuple<int, std::size_t>;
  static std::map<Key, std::shared_ptr<const PlanPair>> cache;
  std::lock_guard lock(planner_mutex());
  const Key key{grid.dim(), grid.n()};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto plans = std::make_shared<const PlanPair>(grid);
  cache.emplace(key, plans);
  return plans;
}

}  // namespace

Spectrum transform_forward(const ScalarField& f) {
  const Grid& grid = f.grid();
  auto plans = plans_for(grid);
  // The plan executes on owned, aligned storage; the field stays untouched.
  RealBuffer in(f.values().begin(), f.values().end());
  ComplexBuffer out(grid.spectral_count());
  plans->forward(in.data(), out.data());
  const double scale = 1.0 / static_cast<double>(grid.point_count());
  for (Complex& z : out) z *= scale;
  return Spectrum(grid, std::move(out));
}

VectorSpectrum transform_forward(const VectorField& v) {
  std::vector<Spectrum> comps;
  comps.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) comps.push_back(transform_forward(v[i]));
  return VectorSpectrum(std::move(comps));
}

ScalarField transform_inverse(const Spectrum& spectrum) {
  const Grid& grid = spectrum.grid();
  auto plans = plans_for(grid);
  ComplexBuffer in(spectrum.coefficients().begin(), spectrum.coefficients().end());
  RealBuffer out(grid.point_count());
  plans->inverse(in.data(), out.data());
  return ScalarField(grid, std::move(out));
}

VectorField transform_inverse(const VectorSpectrum& spectrum) {
  std::vector<ScalarField> comps;
  comps.reserve(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i) comps.push_back(transform_inverse(spectrum[i]));
  return VectorField(std::move(comps));
}

double hermitian_defect(const Spectrum& spectrum) {
  const Grid& grid = spectrum.grid();
  const int d = grid.dim();
  const auto coefs = spectrum.coefficients();
  double largest = 0.0;
  for (const Complex& z : coefs) largest = std::max(largest, std::abs(z));
  if (largest == 0.0) return 0.0;

  std::vector<std::size_t> idx(d);
  std::vector<std::size_t> mirror(d);
  double defect = 0.0;
  for (std::size_t s = 0; s < coefs.size(); ++s) {
    grid.unflatten_spectral(s, idx);
    const std::size_t last = idx[d - 1];
    if (last != 0 && last != grid.n() / 2) continue;
    std::size_t flat = 0;
    for (int a = 0; a < d - 1; ++a) {
      mirror[a] = grid.slot_of(-grid.signed_index(idx[a]));
      flat = flat * grid.n() + mirror[a];
    }
    flat = flat * grid.half_n() + last;
    defect = std::max(defect, std::abs(coefs[flat] - std::conj(coefs[s])));
  }
  return defect / largest;
}

}  // namespace besov
