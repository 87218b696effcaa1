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
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "besov/constructions.hpp"
#include "besov/experiments/commands.hpp"
#include "besov/experiments/random_fields.hpp"
#include "besov/fft.hpp"
#include "besov/spectral_ops.hpp"

namespace besov::experiments {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string level_tag(const std::string& gate, double x) {
  std::ostringstream s;
  s << gate << "[" << x << "]";
  return s.str();
}

std::vector<double> as_doubles(const std::vector<int>& v) { return {v.begin(), v.end()}; }

double relative(double num, double den) { return den == 0.0 ? num : num / den; }

// Relative L^2 norm of everything outside block j.
double leakage_outside(const VectorSpectrum& spec, int j, const CutoffPair& cut) {
  const SpectralMask outside =
      SpectralMask::radial(spec.grid(), [&](double t) { return 1.0 - cut.block(j, t); });
  return relative(parseval_norm(outside.apply(spec)), parseval_norm(spec));
}

// O(N^{2d}) transform with the same normalization as transform_forward.
Spectrum direct_dft(const ScalarField& f) {
  const Grid& g = f.grid();
  const int d = g.dim();
  Spectrum out(g);
  std::vector<std::size_t> ks(d), xs(d);
  const double two_pi_over_n = 2.0 * std::numbers::pi / static_cast<double>(g.n());
  for (std::size_t s = 0; s < g.spectral_count(); ++s) {
    g.unflatten_spectral(s, ks);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < g.point_count(); ++i) {
      g.unflatten_physical(i, xs);
      double phase = 0.0;
      for (int a = 0; a < d; ++a)
        phase += static_cast<double>(g.signed_index(ks[a]) * static_cast<long>(xs[a]));
      acc += f[i] * std::polar(1.0, -two_pi_over_n * phase);
    }
    out.coefficients()[s] = acc / static_cast<double>(g.point_count());
  }
  return out;
}

double c01_norm(const VectorField& u) {
  ScalarField grad_sq(u.grid());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const VectorField gi = gradient(u[i]);
    const ScalarField sq = magnitude_squared(gi);
    grad_sq += sq;
  }
  double gmax = 0.0;
  for (double v : grad_sq.values()) gmax = std::max(gmax, v);
  return max_magnitude(u) + std::sqrt(gmax);
}

}  // namespace

CommandResult cmd_verify_cutoffs(const ExperimentConfig& config) {
  config.validate();
  const CutoffPair cut = build_cutoffs();
  CommandResult res{"verify-cutoffs", {}, {}};

  // Partition of unity on random xi in |xi| <= 100.
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> radius(0.0, 100.0);
  double partition = 0.0;
  double telescoping = 0.0;
  constexpr int kSamples = 10000;
  for (int i = 0; i < kSamples; ++i) {
    const double t = radius(rng);
    double sum = cut.chi(t);
    for (int j = 0; j <= 8; ++j) sum += cut.phi(std::ldexp(t, -j));
    partition = std::max(partition, std::abs(sum - 1.0));
    // The finite sum telescopes to chi(2^-9 t).
    telescoping = std::max(telescoping, std::abs(sum - cut.chi(std::ldexp(t, -9))));
  }

  // Supports, plateau and range on a fine radial grid.
  double support = 0.0;
  double plateau = 0.0;
  double range = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    const double t = 4.0 * i / 200000.0;
    const double c = cut.chi(t), p = cut.phi(t);
    if (t >= CutoffPair::kBallRadius) support = std::max(support, std::abs(c));
    if (t <= CutoffPair::kRingInner || t >= CutoffPair::kRingOuter)
      support = std::max(support, std::abs(p));
    if (t >= 4.0 / 3.0 && t <= 1.5) plateau = std::max(plateau, std::abs(p - 1.0));
    range = std::max({range, -c, c - 1.0, -p, p - 1.0, 0.0});
  }
  ExperimentTable summary("cutoffs", {"samples", "partition_error", "telescoping_error",
                                      "support_violation", "plateau_error", "range_violation"});
  summary.add_row({kSamples, partition, telescoping, support, plateau, range});
  res.verdicts.push_back(check_at_most("cutoffs.partition_of_unity", partition,
                                       gates::kPartitionOfUnity));
  res.verdicts.push_back(check_at_most("cutoffs.supports", std::max({support, plateau, range}),
                                       0.0, "supports, phi = 1 plateau and [0, 1] range"));

  // Delta_j f_n = f_n 1{j = n}.
  ExperimentTable blocks("block_leakage", {"n", "N", "leakage", "max_other_block", "reconstruction"});
  double worst = 0.0;
  for (int n : config.n_list) {
    const Grid grid = config.grid_for(n);
    const PhiProfile prof = build_phi_profile(config.d, line_grid(grid));
    const VectorField f = build_f_n(n, config.s, config.d, grid, prof);
    const VectorSpectrum spec = transform_forward(f);
    const double leak = leakage_outside(spec, n, cut);
    const double norm = parseval_norm(spec);
    double other = 0.0;
    for (int j = -1; j <= max_block_index(grid); ++j) {
      if (j == n) continue;
      other = std::max(other, parseval_norm(block_mask(grid, j, cut).apply(spec)) / norm);
    }
    const LpDecomposition dec = decompose(f, cut);
    const VectorField back = dec.reconstruct();
    const double recon = lp_norm(back - f, 2.0) / lp_norm(f, 2.0);
    blocks.add_row({double(n), double(grid.n()), leak, other, recon});
    worst = std::max({worst, leak, other});
  }
  res.verdicts.push_back(check_at_most("cutoffs.block_leakage", worst, gates::kBlockLeakage));
  res.tables.push_back(std::move(summary));
  res.tables.push_back(std::move(blocks));
  return res;
}

CommandResult cmd_verify_spectral(const ExperimentConfig& config) {
  CommandResult res{"verify-spectral", {}, {}};
  ExperimentTable dft("dft_oracle", {"d", "N", "max_abs_error"});
  double worst_dft = 0.0;
  std::uint64_t seed = config.seed;
  for (int d : {1, 2}) {
    for (std::size_t n : {8u, 16u, 32u}) {
      const Grid g(d, n, 2.0 * std::numbers::pi);
      std::mt19937_64 rng(seed++);
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      ScalarField f(g);
      for (auto& v : f.values()) v = unit(rng);
      const Spectrum fast = transform_forward(f);
      const Spectrum slow = direct_dft(f);
      double err = 0.0;
      for (std::size_t i = 0; i < fast.size(); ++i)
        err = std::max(err, std::abs(fast.coefficients()[i] - slow.coefficients()[i]));
      dft.add_row({double(d), double(n), err});
      worst_dft = std::max(worst_dft, err);
    }
  }
  res.verdicts.push_back(check_at_most("spectral.dft_oracle", worst_dft, gates::kDftOracle));

  // Projector algebra on random (not solenoidal) band-limited fields.
  const Grid g(2, 32, 2.0 * std::numbers::pi);
  constexpr int kFields = 1000;
  double sum_err = 0.0, idem = 0.0, div = 0.0, orth = 0.0;
  for (int t = 0; t < kFields; ++t) {
    std::vector<ScalarField> comps;
    for (int c = 0; c < 2; ++c)
      comps.push_back(random_scalar_field(g, config.seed + 7919ULL * t + c, 8.0));
    const VectorField v(std::move(comps));
    const double nv = lp_norm(v, 2.0);
    const VectorField pv = leray_project(v);
    const VectorField qv = grad_project(v);
    sum_err = std::max(sum_err, lp_norm(pv + qv - v, 2.0) / nv);
    idem = std::max(idem, lp_norm(leray_project(pv) - pv, 2.0) / nv);
    div = std::max(div, lp_norm(divergence(pv), 2.0) / (nv * g.max_wavenumber()));
    orth = std::max(orth, std::abs(inner_product(pv, qv)) / (nv * nv));
  }
  ExperimentTable proj("projector", {"fields", "sum_error", "idempotence_error",
                                     "divergence_error", "orthogonality_error"});
  proj.add_row({double(kFields), sum_err, idem, div, orth});
  res.verdicts.push_back(check_at_most("spectral.projector_sum", sum_err, 1e-12));
  res.verdicts.push_back(check_at_most("spectral.idempotence", idem, 1e-12));
  res.verdicts.push_back(check_at_most("spectral.divergence", div, 1e-10));
  res.verdicts.push_back(check_at_most("spectral.orthogonality", orth, 1e-10));
  res.tables.push_back(std::move(dft));
  res.tables.push_back(std::move(proj));
  return res;
}

CommandResult cmd_lemma_m(const ExperimentConfig& config) {
  if (config.n_max < 2) throw std::invalid_argument("lemma-m needs n_max >= 2");
  const Grid line(1, config.resolution_override.value_or(required_points(config.n_max, config.length)),
                  config.length);
  const PhiProfile prof = build_phi_profile(config.d, line);
  CommandResult res{"lemma-m", {}, {}};
  ExperimentTable tab("lemma_m", {"p", "n", "value", "plateau", "ratio_to_plateau"});
  ExperimentTable summary("lemma_m_summary",
                          {"p", "last_value", "previous_value", "stability", "plateau",
                           "plateau_error", "min_value"});
  double min_value = kInf;
  for (double p : config.p_list) {
    const double plateau = lemma_m_plateau(p, prof);
    std::vector<double> values;
    for (int n = 1; n <= config.n_max; ++n) {
      const double v = lemma_m_value(p, n, prof, line);
      values.push_back(v);
      tab.add_row({p, double(n), v, plateau, v / plateau});
    }
    const double last = values.back();
    const double prev = values[values.size() - 2];
    const double stability = std::abs(prev - last) / last;
    const double err = std::abs(last - plateau) / plateau;
    const double mn = *std::min_element(values.begin(), values.end());
    min_value = std::min(min_value, mn);
    summary.add_row({p, last, prev, stability, plateau, err, mn});
    if (p == 2.0) {
      res.verdicts.push_back(
          check_at_most("lemma_m.stability", stability, gates::kPlateauStability,
                        "p = 2, n_max - 1 against n_max"));
      res.verdicts.push_back(
          check_at_most("lemma_m.average", err, gates::kPlateauAverage, "p = 2 plateau"));
    }
  }
  res.verdicts.push_back(check_at_least("lemma_m.positive", min_value,
                                        std::numeric_limits<double>::min()));
  res.tables.push_back(std::move(tab));
  res.tables.push_back(std::move(summary));
  return res;
}

CommandResult cmd_norm_scaling(const ExperimentConfig& config) {
  config.validate();
  const BesovParams params = config.params();
  const CutoffPair cut = build_cutoffs();
  const double s = params.s, p = params.p, r = params.r;
  CommandResult res{"norm-scaling", {}, {}};

  std::vector<std::string> cols{"n", "N"};
  for (double off : config.sigma_offsets) cols.push_back(level_tag("f", off));
  const std::vector<std::string> rest{
      "g",         "g_below",   "g_above",    "u0_below",  "u0",       "u0_above",
      "v0_below",  "v0_above",  "qv0_below",  "ff",        "fg",       "q_gf",
      "gg",        "under_resolved"};
  cols.insert(cols.end(), rest.begin(), rest.end());
  ExperimentTable tab("norm_scaling", cols);

  for (int n : config.n_list) {
    const Grid grid = config.grid_for(n);
    const PhiProfile prof = build_phi_profile(config.d, line_grid(grid));
    const DatumFamily fam = build_family(n, s, config.d, grid, prof);
    bool flag = fam.under_resolved;
    auto norm = [&](const VectorField& u, double sigma) {
      const BlockNorms b = block_norms(u, p, cut);
      flag = flag || b.under_resolved(sigma);
      return b.besov(sigma, r);
    };
    std::vector<double> row{double(n), double(grid.n())};
    const BlockNorms fb = block_norms(fam.f, p, cut);
    for (double off : config.sigma_offsets) row.push_back(fb.besov(s + off, r));
    const BlockNorms gb = block_norms(fam.g, p, cut);
    row.push_back(gb.besov(s, r));
    row.push_back(gb.besov(s - 1.0, r));
    row.push_back(gb.besov(s + 1.0, r));
    const BlockNorms ub = block_norms(fam.u0, p, cut);
    row.push_back(ub.besov(s - 1.0, r));
    row.push_back(ub.besov(s, r));
    row.push_back(ub.besov(s + 1.0, r));
    const BlockNorms vb = block_norms(fam.v0, p, cut);
    row.push_back(vb.besov(s - 1.0, r));
    row.push_back(vb.besov(s + 1.0, r));
    row.push_back(norm(grad_project(fam.v0), s - 1.0));
    row.push_back(norm(advective_term(fam.f, fam.f).value, s));
    row.push_back(norm(advective_term(fam.f, fam.g).value, s));
    row.push_back(norm(grad_project(advective_term(fam.g, fam.f).value), s));
    row.push_back(norm(advective_term(fam.g, fam.g).value, s));
    row.push_back(flag ? 1.0 : 0.0);
    tab.add_row(std::move(row));
  }

  if (config.n_list.size() >= 3) {
    const std::vector<double> ns = as_doubles(config.n_list);
    for (std::size_t c = 2; c + 1 < cols.size(); ++c)
      tab.set_fit(cols[c], fit_slope(ns, tab.column(cols[c])));
    for (double off : config.sigma_offsets) {
      const std::string col = level_tag("f", off);
      res.verdicts.push_back(check_within(level_tag("norm_scaling.f_slope", off),
                                          tab.fit(col).slope, off, gates::kNormSlope));
    }
    res.verdicts.push_back(
        check_within("norm_scaling.g_slope", tab.fit("g").slope, -1.0, gates::kLowSlope));
  } else {
    res.verdicts.push_back({"norm_scaling.f_slope", false, 0.0, 0.0, "", "need >= 3 levels"});
  }
  res.tables.push_back(std::move(tab));
  return res;
}

CommandResult cmd_product_lowerbound(const ExperimentConfig& config) {
  config.validate();
  const BesovParams params = config.params();
  const CutoffPair cut = build_cutoffs();
  CommandResult res{"product-lowerbound", {}, {}};
  ExperimentTable tab("product_lowerbound",
                      {"n", "N", "weak_norm", "populated_block", "leakage", "component1",
                       "component2", "trailing_max", "closed_form_error"});
  for (int n : config.n_list) {
    const Grid grid = config.grid_for(n);
    const PhiProfile prof = build_phi_profile(config.d, line_grid(grid));
    const DatumFamily fam = build_family(n, params.s, config.d, grid, prof);
    const ProductLowerBound lb = product_lower_bound(n, params, fam, cut);
    const VectorField closed = closed_form_product(n, params.s, config.d, grid, prof);
    const double cf = lp_norm(lb.product - closed, kInf) / lp_norm(closed, kInf);
    tab.add_row({double(n), double(grid.n()), lb.weak_norm, double(lb.populated_block), lb.leakage,
                 lb.component_weak_norms[0], lb.component_weak_norms[1],
                 lb.trailing_components_max, cf});
  }
  const std::vector<double> weak = tab.column("weak_norm");
  const auto [lo, hi] = std::minmax_element(weak.begin(), weak.end());
  res.verdicts.push_back(
      check_at_most("product.weak_variation", (*hi - *lo) / *lo, gates::kWeakVariation,
                    "(max - min) / min over n_list"));
  res.verdicts.push_back(check_at_least("product.weak_floor", *lo, gates::kWeakFloor * weak.back(),
                                        "min over n_list against half the last level"));
  const std::vector<double> leak = tab.column("leakage");
  res.verdicts.push_back(check_at_most("product.localization",
                                       *std::max_element(leak.begin(), leak.end()),
                                       gates::kBlockLeakage));
  if (config.n_list.size() >= 3) {
    const std::vector<double> ns = as_doubles(config.n_list);
    tab.set_fit("weak_norm", fit_slope(ns, weak));
    tab.set_fit("component1", fit_slope(ns, tab.column("component1")));
    tab.set_fit("component2", fit_slope(ns, tab.column("component2")));
    res.verdicts.push_back(check_within("product.component1_slope", tab.fit("component1").slope,
                                        -1.0, gates::kComponentSlope));
  } else {
    res.verdicts.push_back({"product.component1_slope", false, 0.0, 0.0, "", "need >= 3 levels"});
  }
  res.tables.push_back(std::move(tab));
  return res;
}

CommandResult cmd_product_estimate_probe(const ExperimentConfig& config) {
  const BesovParams params = config.params();
  params.validate();
  const CutoffPair cut = build_cutoffs();
  const double s = params.s, p = params.p, r = params.r;
  const std::size_t coarse = config.d >= 3 ? 16 : 32;
  CommandResult res{"product-estimate-probe", {}, {}};
  ExperimentTable trials("probe_trials", {"N", "trial", "transport", "pressure_high",
                                          "pressure_low", "pressure_low_swapped"});
  ExperimentTable summary("probe_summary",
                          {"N", "max_transport", "max_pressure_high", "max_pressure_low"});

  std::vector<double> maxima[2];
  for (int level = 0; level < 2; ++level) {
    const Grid grid(config.d, coarse << level, 2.0 * std::numbers::pi);
    double m1 = 0.0, m2 = 0.0, m3 = 0.0;
    for (int t = 0; t < config.trials; ++t) {
      const VectorField u = random_solenoidal_field(grid, config.seed + 2ULL * t, 4.0);
      const VectorField v = random_solenoidal_field(grid, config.seed + 2ULL * t + 1, 4.0);
      auto bn = [&](const VectorField& w, double sigma) {
        return block_norms(w, p, cut).besov(sigma, r);
      };
      const double u_lo = bn(u, s - 1.0), u_s = bn(u, s);
      const double v_lo = bn(v, s - 1.0), v_s = bn(v, s);
      const VectorField uv = advective_term(u, v).value;
      const VectorField q = grad_project(uv);
      const double transport = bn(uv, s - 1.0) / (u_lo * v_s);
      const double high = bn(q, s) / (c01_norm(u) * v_s + c01_norm(v) * u_s);
      const double q_lo = bn(q, s - 1.0);
      const double low = q_lo / std::min(u_lo * v_s, v_lo * u_s);
      const double low_swapped = q_lo / std::min(v_lo * u_s, u_lo * v_s);
      trials.add_row({double(grid.n()), double(t), transport, high, low, low_swapped});
      m1 = std::max(m1, transport);
      m2 = std::max(m2, high);
      m3 = std::max(m3, low);
    }
    summary.add_row({double(grid.n()), m1, m2, m3});
    maxima[level] = {m1, m2, m3};
  }
  double finite = 1.0;
  double drift = 0.0;
  for (int k = 0; k < 3; ++k) {
    if (!std::isfinite(maxima[0][k]) || !std::isfinite(maxima[1][k])) finite = 0.0;
    drift = std::max(drift, std::max(maxima[1][k] / maxima[0][k], maxima[0][k] / maxima[1][k]));
  }
  res.verdicts.push_back(check_at_least("probe.bounded", finite, 1.0, "all ratios finite"));
  res.verdicts.push_back(check_at_most("probe.refinement", drift, 2.0,
                                       "max ratio change between N and 2N"));

  // Transport ratio for the constructed pair at the first level.
  ExperimentTable family("probe_family", {"n", "transport_g_f", "product_weak_norm"});
  if (!config.n_list.empty() && config.d >= 2) {
    const int n = config.n_list.front();
    const Grid grid = config.grid_for(n);
    const PhiProfile prof = build_phi_profile(config.d, line_grid(grid));
    const DatumFamily fam = build_family(n, s, config.d, grid, prof);
    const VectorField gf = advective_term(fam.g, fam.f).value;
    const double ratio = block_norms(gf, p, cut).besov(s - 1.0, r) /
                         (block_norms(fam.g, p, cut).besov(s - 1.0, r) *
                          block_norms(fam.f, p, cut).besov(s, r));
    family.add_row({double(n), ratio, block_norms(gf, p, cut).weak(s)});
  }
  res.tables.push_back(std::move(trials));
  res.tables.push_back(std::move(summary));
  res.tables.push_back(std::move(family));
  return res;
}

}  // namespace besov::experiments
