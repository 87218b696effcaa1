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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "besov/euler.hpp"
#include "besov/grid.hpp"
#include "besov/littlewood_paley.hpp"

namespace besov::experiments {

// Settings shared by every command. Stored as JSON; exponents accept the
// string "inf". to_json/from_json round-trip exactly.
struct ExperimentConfig {
  std::string experiment;
  int d = 2;
  double s = 2.5;
  double p = 4.0;
  double r = 2.0;
  std::vector<int> n_list{2, 3, 4, 5};
  std::vector<double> t_grid{0.02, 0.04, 0.06, 0.08, 0.1};
  double length = kDefaultBoxLength;
  // Points per axis for every level; the smallest admissible N when unset.
  std::optional<std::size_t> resolution_override;

  // Solver.
  std::optional<double> dt;
  double cfl = 0.5;
  double dt_max = 0.01;

  // Per-command knobs.
  std::vector<double> p_list{1.0, 2.0, 4.0};  // lemma-m
  int n_max = 8;                              // lemma-m
  double t_eval = 0.1;                        // prop1
  std::vector<double> sigma_offsets{-1.0, 0.0, 1.0};
  int trials = 100;  // product-estimate-probe
  std::uint64_t seed = 20261014;

  std::string out_dir = "out";

  BesovParams params() const;
  std::size_t points_for(int n) const;
  Grid grid_for(int n) const;
  SolverConfig solver(double final_time, std::vector<double> samples) const;
  // Sorted n_list, checked for >= 1 entries and grid resolution per level.
  void validate() const;

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  // FNV-1a 64 of the canonical JSON dump, as 16 hex digits.
  std::string hash() const;
};

ExperimentConfig load_config(const std::string& path);
void save_config(const ExperimentConfig& config, const std::string& path);

// "inf" / "infinity" or a decimal number.
double parse_exponent(const std::string& text);
nlohmann::json exponent_to_json(double x);
double exponent_from_json(const nlohmann::json& j);

}  // namespace besov::experiments
