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

#include "besov/experiments/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "besov/constructions.hpp"

namespace besov::experiments {

using nlohmann::json;

double parse_exponent(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an exponent: '" + text + "'");
  }
  if (used != t.size()) throw std::invalid_argument("not an exponent: '" + text + "'");
  return v;
}

json exponent_to_json(double x) {
  if (std::isinf(x) && x > 0) return "inf";
  return x;
}

double exponent_from_json(const json& j) {
  if (j.is_string()) return parse_exponent(j.get<std::string>());
  return j.get<double>();
}

BesovParams ExperimentConfig::params() const { return BesovParams{s, p, r, d}; }

std::size_t ExperimentConfig::points_for(int n) const {
  return resolution_override ? *resolution_override : required_points(n, length);
}

Grid ExperimentConfig::grid_for(int n) const { return Grid(d, points_for(n), length); }

SolverConfig ExperimentConfig::solver(double final_time, std::vector<double> samples) const {
  SolverConfig c;
  c.dt = dt;
  c.cfl = cfl;
  c.dt_max = dt_max;
  c.final_time = final_time;
  c.sample_times = std::move(samples);
  return c;
}

void ExperimentConfig::validate() const {
  params().validate();
  if (d < 2) throw std::invalid_argument("the experiments need d >= 2");
  if (n_list.empty()) throw std::invalid_argument("n_list is empty");
  if (!std::is_sorted(n_list.begin(), n_list.end()) ||
      std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end())
    throw std::invalid_argument("n_list must be strictly increasing");
  if (n_list.front() < 0) throw std::invalid_argument("levels must be non-negative");
  if (!std::is_sorted(t_grid.begin(), t_grid.end()))
    throw std::invalid_argument("t_grid must be sorted");
  for (double t : t_grid)
    if (!(t > 0.0)) throw std::invalid_argument("t_grid entries must be positive");
  if (!(length > 0.0)) throw std::invalid_argument("box length must be positive");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  for (int n : n_list) require_resolved(grid_for(n), n);
}

json ExperimentConfig::to_json() const {
  json j;
  j["experiment"] = experiment;
  j["d"] = d;
  j["s"] = s;
  j["p"] = exponent_to_json(p);
  j["r"] = exponent_to_json(r);
  j["n_list"] = n_list;
  j["t_grid"] = t_grid;
  j["length"] = length;
  j["resolution_override"] = resolution_override ? json(*resolution_override) : json(nullptr);
  j["solver"] = {{"dt", dt ? json(*dt) : json(nullptr)}, {"cfl", cfl}, {"dt_max", dt_max}};
  json ps = json::array();
  for (double x : p_list) ps.push_back(exponent_to_json(x));
  j["p_list"] = ps;
  j["n_max"] = n_max;
  j["t_eval"] = t_eval;
  j["sigma_offsets"] = sigma_offsets;
  j["trials"] = trials;
  j["seed"] = seed;
  j["out_dir"] = out_dir;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const json& j) {
  static const std::vector<std::string> known{
      "experiment", "d",     "s",      "p",      "r",             "n_list", "t_grid",
      "length",     "resolution_override", "solver", "p_list", "n_max", "t_eval",
      "sigma_offsets", "trials", "seed", "out_dir"};
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw std::invalid_argument("unknown config key '" + key + "'");

  ExperimentConfig c;
  if (j.contains("experiment")) c.experiment = j["experiment"].get<std::string>();
  if (j.contains("d")) c.d = j["d"].get<int>();
  if (j.contains("s")) c.s = j["s"].get<double>();
  if (j.contains("p")) c.p = exponent_from_json(j["p"]);
  if (j.contains("r")) c.r = exponent_from_json(j["r"]);
  if (j.contains("n_list")) c.n_list = j["n_list"].get<std::vector<int>>();
  if (j.contains("t_grid")) c.t_grid = j["t_grid"].get<std::vector<double>>();
  if (j.contains("length")) c.length = j["length"].get<double>();
  if (j.contains("resolution_override") && !j["resolution_override"].is_null())
    c.resolution_override = j["resolution_override"].get<std::size_t>();
  if (j.contains("solver")) {
    const json& sv = j["solver"];
    if (sv.contains("dt") && !sv["dt"].is_null()) c.dt = sv["dt"].get<double>();
    if (sv.contains("cfl")) c.cfl = sv["cfl"].get<double>();
    if (sv.contains("dt_max")) c.dt_max = sv["dt_max"].get<double>();
  }
  if (j.contains("p_list")) {
    c.p_list.clear();
    for (const auto& x : j["p_list"]) c.p_list.push_back(exponent_from_json(x));
  }
  if (j.contains("n_max")) c.n_max = j["n_max"].get<int>();
  if (j.contains("t_eval")) c.t_eval = j["t_eval"].get<double>();
  if (j.contains("sigma_offsets")) c.sigma_offsets = j["sigma_offsets"].get<std::vector<double>>();
  if (j.contains("trials")) c.trials = j["trials"].get<int>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
  return c;
}

std::string ExperimentConfig::hash() const {
  const std::string text = to_json().dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config " + path + ": " + e.what());
  }
  return ExperimentConfig::from_json(j);
}

void save_config(const ExperimentConfig& config, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write config " + path);
  out << config.to_json().dump(2) << "\n";
}

}  // namespace besov::experiments
