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

#include <string>
#include <vector>

#include <json.hpp>

#include "besov/experiments/config.hpp"
#include "besov/experiments/table.hpp"

namespace besov::experiments {

struct RunManifest {
  std::string command;
  std::string config_hash;
  nlohmann::json config;
  std::string version;
  std::string git_revision;
  std::string started_utc;
  double wall_clock_seconds = 0.0;
  std::uint64_t seed = 0;
  std::vector<Verdict> verdicts;
  nlohmann::json tools;

  nlohmann::json to_json() const;
};

RunManifest make_manifest(const std::string& command, const ExperimentConfig& config);
std::string code_version();
nlohmann::json tool_versions();

}  // namespace besov::experiments
