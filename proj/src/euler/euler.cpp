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

#include "besov/euler.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "besov/fft.hpp"
#include "besov/spectral_ops.hpp"

namespace besov {

void SolverConfig::validate() const {
  if (dt && !(*dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  if (!(dt_max > 0.0)) throw std::invalid_argument("dt_max must be positive");
  if (!(final_time >= 0.0)) throw std::invalid_argument("final time must be non-negative");
  if (!(blowup_factor > 1.0)) throw std::invalid_argument("blow-up factor must exceed 1");
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    const double t = sample_times[i];
    if (!(t >= 0.0 && t <= final_time * (1.0 + 1e-12)))
      throw std::invalid_argument("sample time outside [0, T]");
    if (i > 0 && !(t > sample_times[i - 1]))
      throw std::invalid_argument("sample times must be strictly increasing");
  }
}

const Snapshot& Trajectory::at(double t) const {
  for (const auto& s : snapshots)
    if (std::abs(s.t - t) <= 1e-12 * std::max(1.0, std::abs(t))) return s;
  std::ostringstream msg;
  msg << "no snapshot at t=" << t;
  throw std::out_of_range(msg.str());
}

VectorSpectrum rhs_spectrum(const VectorSpectrum& u) {
  VectorSpectrum adv = advective_spectrum(transform_inverse(u), u);
  VectorSpectrum out = leray_project(adv);
  out *= -1.0;
  return out;
}

VectorField rhs(const VectorField& u, bool* under_resolved) {
  const VectorSpectrum us = leray_project(transform_forward(u));
  if (under_resolved) *under_resolved = out_of_band_fraction(us) > kOutOfBandTolerance;
  return transform_inverse(rhs_spectrum(us));
}

VectorSpectrum step_spectrum(const VectorSpectrum& u, double dt) {
  const VectorSpectrum k1 = rhs_spectrum(u);
  VectorSpectrum stage = u;
  stage.add_scaled(0.5 * dt, k1);
  const VectorSpectrum k2 = rhs_spectrum(stage);
  stage = u;
  stage.add_scaled(0.5 * dt, k2);
  const VectorSpectrum k3 = rhs_spectrum(stage);
  stage = u;
  stage.add_scaled(dt, k3);
  const VectorSpectrum k4 = rhs_spectrum(stage);

  VectorSpectrum next = u;
  next.add_scaled(dt / 6.0, k1);
  next.add_scaled(dt / 3.0, k2);
  next.add_scaled(dt / 3.0, k3);
  next.add_scaled(dt / 6.0, k4);
  return leray_project(next);
}

VectorField step(const VectorField& u, double dt) {
  return transform_inverse(step_spectrum(leray_project(transform_forward(u)), dt));
}

double kinetic_energy(const VectorField& u) { return 0.5 * inner_product(u, u); }

double relative_divergence(const VectorField& u) {
  const double norm = lp_norm(u, 2.0);
  if (norm == 0.0) return 0.0;
  return lp_norm(divergence(u), 2.0) / (norm * u.grid().max_wavenumber());
}

double enstrophy(const VectorField& u) {
  if (u.grid().dim() != 2 || u.size() != 2) return 0.0;
  const Spectrum a = transform_forward(u[0]);
  const Spectrum b = transform_forward(u[1]);
  Spectrum curl = derivative(b, 0);
  curl -= derivative(a, 1);
  const double w = parseval_norm(curl);
  return 0.5 * w * w;
}

namespace {

Snapshot make_snapshot(double t, VectorField u) {
  Snapshot s{t, std::move(u)};
  s.energy = kinetic_energy(s.u);
  s.divergence = relative_divergence(s.u);
  s.enstrophy = enstrophy(s.u);
  return s;
}

}  // namespace

Trajectory solve(const VectorField& u0, const SolverConfig& config) {
  config.validate();
  const Grid& grid = u0.grid();
  if (static_cast<int>(u0.size()) != grid.dim())
    throw std::invalid_argument("solve: velocity needs d components");

  Trajectory traj;
  VectorSpectrum u = transform_forward(u0);
  const double residual = parseval_norm(divergence(u));
  const double scale = parseval_norm(u) * grid.max_wavenumber();
  const bool projected = scale > 0.0 && residual > 1e-12 * scale;
  if (projected) u = leray_project(u);
  traj.under_resolved = out_of_band_fraction(u) > kOutOfBandTolerance;

  const double initial_max = max_magnitude(u0);
  const double end_time =
      config.sample_times.empty() ? config.final_time
                                  : std::max(config.final_time, config.sample_times.back());
  std::vector<double> targets = config.sample_times;
  if (targets.empty() || targets.back() < end_time) targets.push_back(end_time);

  double t = 0.0;
  auto next_sample = config.sample_times.begin();
  auto record = [&](const VectorField& phys) {
    while (next_sample != config.sample_times.end() &&
           std::abs(*next_sample - t) <= 1e-12 * std::max(1.0, t)) {
      traj.snapshots.push_back(make_snapshot(*next_sample, phys));
      ++next_sample;
    }
  };
  // The t = 0 snapshot is the datum itself unless it had to be projected.
  VectorField phys = projected ? transform_inverse(u) : u0;
  record(phys);

  for (double target : targets) {
    while (target - t > 1e-12 * std::max(1.0, target)) {
      double dt = 0.0;
      if (config.dt) {
        dt = *config.dt;
      } else {
        const double vmax = max_magnitude(phys);
        dt = vmax > 0.0 ? std::min(config.dt_max, config.cfl * grid.spacing() / vmax)
                        : config.dt_max;
      }
      // Land exactly on the target; absorb a sliver rather than take a tiny step.
      if (t + dt >= target - 1e-9 * dt) dt = target - t;
      u = step_spectrum(u, dt);
      t = (target - (t + dt) <= 1e-12 * std::max(1.0, target)) ? target : t + dt;
      ++traj.steps;
      phys = transform_inverse(u);

      const double vmax = max_magnitude(phys);
      if (!std::isfinite(vmax) ||
          (initial_max > 0.0 && vmax > config.blowup_factor * initial_max)) {
        std::ostringstream msg;
        msg << "max|u| grew from " << initial_max << " to " << vmax << " by t=" << t
            << "; the run is under-resolved or past its reliable lifespan";
        throw BlowUpError(msg.str());
      }
    }
    record(phys);
  }
  return traj;
}

std::vector<BesovRow> trajectory_besov(const Trajectory& traj, const BesovParams& params,
                                       const CutoffPair& cut) {
  params.validate();
  std::vector<BesovRow> rows;
  for (const auto& snap : traj.snapshots) {
    const BlockNorms blocks = block_norms(snap.u, params.p, cut);
    BesovRow row;
    row.t = snap.t;
    row.below = blocks.besov(params.s - 1.0, params.r);
    row.at = blocks.besov(params.s, params.r);
    row.above = blocks.besov(params.s + 1.0, params.r);
    row.under_resolved = blocks.under_resolved(params.s + 1.0);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace besov
