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

#include "besov/experiments/manifest.hpp"

#include <chrono>
#include <ctime>

#include <fftw3.h>

#include "besov/kernels.hpp"

#ifndef BESOV_VERSION
#define BESOV_VERSION "0.0.0"
#endif
#ifndef BESOV_GIT_REVISION
#define BESOV_GIT_REVISION "unknown"
#endif

namespace besov::experiments {

using nlohmann::json;

std::string code_version() { return std::string(BESOV_VERSION) + "+" + BESOV_GIT_REVISION; }

json tool_versions() {
  json t;
#if defined(__clang__)
  t["compiler"] = std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  t["compiler"] = std::string("gcc ") + __VERSION__;
#else
  t["compiler"] = "unknown";
#endif
  t["fftw"] = std::string(fftw_version);
  t["kernels"] = std::string(kernels::to_string(kernels::active().isa));
  t["cxx_standard"] = static_cast<long>(__cplusplus);
  return t;
}

RunManifest make_manifest(const std::string& command, const ExperimentConfig& config) {
  RunManifest m;
  m.command = command;
  m.config_hash = config.hash();
  m.config = config.to_json();
  m.version = BESOV_VERSION;
  m.git_revision = BESOV_GIT_REVISION;
  m.seed = config.seed;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  m.started_utc = buf;
  m.tools = tool_versions();
  return m;
}

json RunManifest::to_json() const {
  json v = json::array();
  bool all = true;
  for (const auto& x : verdicts) {
    all = all && x.pass;
    v.push_back({{"gate", x.gate},
                 {"pass", x.pass},
                 {"value", x.value},
                 {"threshold", x.threshold},
                 {"relation", x.relation},
                 {"detail", x.detail}});
  }
  return {{"command", command},
          {"config_hash", config_hash},
          {"config", config},
          {"version", version},
          {"git_revision", git_revision},
          {"started_utc", started_utc},
          {"wall_clock_seconds", wall_clock_seconds},
          {"seed", seed},
          {"all_pass", all},
          {"verdicts", v},
          {"tools", tools}};
}

}  // namespace besov::experiments
