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

#include <functional>
#include <string>
#include <vector>

#include "besov/experiments/config.hpp"
#include "besov/experiments/table.hpp"

namespace besov::experiments {

struct CommandResult {
  std::string command;
  std::vector<ExperimentTable> tables;
  std::vector<Verdict> verdicts;

  bool passed() const;
  const ExperimentTable& table(const std::string& name) const;
  const Verdict& verdict(const std::string& gate) const;
};

// Gate tolerances.
namespace gates {
inline constexpr double kPartitionOfUnity = 1e-12;
inline constexpr double kBlockLeakage = 1e-10;
inline constexpr double kDftOracle = 1e-12;
inline constexpr double kPlateauStability = 0.01;
inline constexpr double kPlateauAverage = 0.02;
inline constexpr double kNormSlope = 0.05;
inline constexpr double kLowSlope = 0.01;
inline constexpr double kWeakVariation = 0.10;
inline constexpr double kWeakFloor = 0.5;
inline constexpr double kComponentSlope = 0.1;
inline constexpr double kStationarity = 1e-7;
inline constexpr double kEnergyDrift = 1e-6;
inline constexpr double kRk4Factor = 16.0;
inline constexpr double kRk4Spread = 0.30;
inline constexpr double kProp1BelowFactor = 0.9;   // slope <= -0.9 s
inline constexpr double kProp1AtFactor = 0.9;      // slope <= -0.9 (s-1)/2
inline constexpr double kProp1Ratio = 0.15;
inline constexpr double kProp2ExponentLow = 1.8;
inline constexpr double kProp2ExponentHigh = 2.5;
inline constexpr double kProp2BelowSlope = -0.8;
inline constexpr double kSeparationD0Slope = 0.05;
inline constexpr double kSeparationSlopeFactor = 0.5;
inline constexpr double kSeparationIntercept = 0.10;
inline constexpr double kSlackModel = 1.5;
}  // namespace gates

CommandResult cmd_verify_cutoffs(const ExperimentConfig& config);
// Direct-DFT oracle and projector algebra on random fields.
CommandResult cmd_verify_spectral(const ExperimentConfig& config);
CommandResult cmd_lemma_m(const ExperimentConfig& config);
CommandResult cmd_norm_scaling(const ExperimentConfig& config);
CommandResult cmd_product_lowerbound(const ExperimentConfig& config);
CommandResult cmd_product_estimate_probe(const ExperimentConfig& config);
CommandResult cmd_prop1(const ExperimentConfig& config);
CommandResult cmd_prop2(const ExperimentConfig& config);
CommandResult cmd_nonuniform(const ExperimentConfig& config);
CommandResult cmd_taylor_green(const ExperimentConfig& config);
CommandResult cmd_convergence(const ExperimentConfig& config);
// BSVF dumps of f_n, g_n, u0, v0 and P v0 for every n; no gates.
CommandResult cmd_export_family(const ExperimentConfig& config);

struct CommandInfo {
  std::string name;
  std::string summary;
  std::function<CommandResult(const ExperimentConfig&)> run;
};

const std::vector<CommandInfo>& command_registry();

// Writes <out>/<table>.csv, <out>/<table>_fits.csv and <out>/manifest.json.
void write_outputs(const CommandResult& result, const ExperimentConfig& config,
                   double wall_clock_seconds);

// Helpers shared by the command implementations.
Verdict check_at_most(std::string gate, double value, double bound, std::string detail = {});
Verdict check_at_least(std::string gate, double value, double bound, std::string detail = {});
Verdict check_within(std::string gate, double value, double target, double tol,
                     std::string detail = {});

}  // namespace besov::experiments
