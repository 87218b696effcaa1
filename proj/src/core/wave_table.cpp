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

#include "besov/wave_table.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace besov {
namespace {

std::shared_ptr<const WaveTable> build(const Grid& grid) {
  auto t = std::make_shared<WaveTable>(WaveTable{grid, {}, {}, {}, {}, {}, {}});
  const int d = grid.dim();
  const std::size_t count = grid.spectral_count();
  const double step = grid.wavenumber_step();
  const long nyquist = -static_cast<long>(grid.n() / 2);
  const double cutoff = grid.dealias_radius();

  t->derivative.assign(d, RealBuffer(count));
  t->inverse_laplacian.resize(count);
  t->laplacian.resize(count);
  t->radius.resize(count);
  t->dealias.resize(count);
  t->multiplicity.resize(count);

  std::vector<std::size_t> idx(d);
  for (std::size_t s = 0; s < count; ++s) {
    grid.unflatten_spectral(s, idx);
    double k2 = 0.0;
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      // The last axis stores slots 0..N/2 directly as non-negative indices.
      const long k = (a == d - 1) ? static_cast<long>(idx[a]) : grid.signed_index(idx[a]);
      const bool is_nyquist = (k == nyquist) || (a == d - 1 && idx[a] == grid.n() / 2);
      const double xi = step * static_cast<double>(k);
      const double kd = is_nyquist ? 0.0 : xi;
      t->derivative[a][s] = kd;
      k2 += kd * kd;
      r2 += xi * xi;
    }
    t->laplacian[s] = -k2;
    t->inverse_laplacian[s] = k2 > 0.0 ? 1.0 / k2 : 0.0;
    t->radius[s] = std::sqrt(r2);
    t->dealias[s] = t->radius[s] < cutoff ? 1.0 : 0.0;
    const std::size_t last = idx[d - 1];
    t->multiplicity[s] = (last == 0 || last == grid.n() / 2) ? 1.0 : 2.0;
  }
  return t;
}

}  // namespace

std::shared_ptr<const WaveTable> wave_table(const Grid& grid) {
  using Key = std::tuple<int, std::size_t, double>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const WaveTable>> cache;
  const Key key{grid.dim(), grid.n(), grid.length()};
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = build(grid);
  cache.emplace(key, table);
  return table;
}

}  // namespace besov
