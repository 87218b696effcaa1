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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "besov/experiments/commands.hpp"
#include "besov/experiments/manifest.hpp"

namespace besov::experiments {

bool CommandResult::passed() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

const ExperimentTable& CommandResult::table(const std::string& name) const {
  for (const auto& t : tables)
    if (t.name() == name) return t;
  throw std::out_of_range(command + " produced no table " + name);
}

const Verdict& CommandResult::verdict(const std::string& gate) const {
  for (const auto& v : verdicts)
    if (v.gate == gate) return v;
  throw std::out_of_range(command + " produced no verdict " + gate);
}

Verdict check_at_most(std::string gate, double value, double bound, std::string detail) {
  return {std::move(gate), value <= bound, value, bound, "<=", std::move(detail)};
}

Verdict check_at_least(std::string gate, double value, double bound, std::string detail) {
  return {std::move(gate), value >= bound, value, bound, ">=", std::move(detail)};
}

Verdict check_within(std::string gate, double value, double target, double tol,
                     std::string detail) {
  std::ostringstream rel;
  rel << "within " << tol << " of " << target;
  if (!detail.empty()) detail += "; ";
  detail += rel.str();
  return {std::move(gate), std::abs(value - target) <= tol, value, tol, "|value-target| <=",
          std::move(detail)};
}

const std::vector<CommandInfo>& command_registry() {
  static const std::vector<CommandInfo> registry{
      {"verify-cutoffs", "partition of unity, cutoff supports, single-block leakage of f_n",
       cmd_verify_cutoffs},
      {"verify-spectral", "direct-DFT oracle and Leray projector algebra", cmd_verify_spectral},
      {"lemma-m", "L^p norm of phi^2 cos(w x) against the averaging plateau", cmd_lemma_m},
      {"norm-scaling", "Besov norm slopes in n for f_n, g_n, u0, v0 and the products",
       cmd_norm_scaling},
      {"product-lowerbound", "B^s_{p,inf} norm of g_n . grad f_n across n",
       cmd_product_lowerbound},
      {"product-estimate-probe", "empirical constants of the product and pressure estimates",
       cmd_product_estimate_probe},
      {"prop1", "S_t(f_n) against f_n in B^{s-1}, B^s, B^{s+1}", cmd_prop1},
      {"prop2", "second-order error w_n = S_t(u0) - u0 - t P v0", cmd_prop2},
      {"nonuniform", "separation D_n(t) of S_t(f_n + g_n) and S_t(f_n)", cmd_nonuniform},
      {"taylor-green", "steady Taylor-Green vortex and energy conservation", cmd_taylor_green},
      {"convergence", "RK4 self-convergence under dt halving", cmd_convergence},
      {"export-family", "BSVF dumps of the initial data", cmd_export_family},
  };
  return registry;
}

void write_outputs(const CommandResult& result, const ExperimentConfig& config,
                   double wall_clock_seconds) {
  namespace fs = std::filesystem;
  const fs::path dir(config.out_dir);
  fs::create_directories(dir);
  for (const auto& t : result.tables) {
    std::ofstream csv(dir / (t.name() + ".csv"), std::ios::binary);
    t.write_csv(csv);
    if (!t.fits().empty()) {
      std::ofstream fits(dir / (t.name() + "_fits.csv"), std::ios::binary);
      t.write_fits_csv(fits);
    }
  }
  RunManifest m = make_manifest(result.command, config);
  m.wall_clock_seconds = wall_clock_seconds;
  m.verdicts = result.verdicts;
  std::ofstream out(dir / "manifest.json");
  out << m.to_json().dump(2) << "\n";
  save_config(config, (dir / "config.json").string());
}

}  // namespace besov::experiments
