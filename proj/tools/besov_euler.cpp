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

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "besov/experiments/commands.hpp"
#include "besov/experiments/config.hpp"
#include "besov/experiments/manifest.hpp"
#include "besov/kernels.hpp"

namespace ex = besov::experiments;

namespace {

struct Overrides {
  std::string config_path;
  std::string out;
  std::string n_list, t_grid, p_list, sigma_offsets;
  std::string s, p, r;
  std::optional<int> d, n_max, trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> resolution;
  std::optional<double> dt, dt_max, cfl, t_eval;
  bool quiet = false;
};

template <class T>
std::vector<T> split_list(const std::string& text, T (*parse)(const std::string&)) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse(item));
  }
  if (out.empty()) throw CLI::ValidationError("empty list '" + text + "'");
  return out;
}

int parse_int(const std::string& s) { return std::stoi(s); }
double parse_real(const std::string& s) { return std::stod(s); }
double parse_exp(const std::string& s) { return ex::parse_exponent(s); }

void add_shared_options(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_path, "JSON config file (see README)");
  cmd.add_option("--out", o.out, "output directory");
  cmd.add_option("--n-list", o.n_list, "comma-separated levels, e.g. 2,3,4,5");
  cmd.add_option("--t-grid", o.t_grid, "comma-separated sample times");
  cmd.add_option("--s", o.s, "regularity s");
  cmd.add_option("--p", o.p, "integrability p (number or inf)");
  cmd.add_option("--r", o.r, "summability r (number or inf)");
  cmd.add_option("--d", o.d, "dimension");
  cmd.add_option("--seed", o.seed, "seed for randomized probes");
  cmd.add_option("--resolution-override", o.resolution, "points per axis for every level");
  cmd.add_option("--dt", o.dt, "fixed time step");
  cmd.add_option("--dt-max", o.dt_max, "largest adaptive time step");
  cmd.add_option("--cfl", o.cfl, "CFL number for the adaptive step");
  cmd.add_option("--p-list", o.p_list, "lemma-m exponents, e.g. 1,2,4,inf");
  cmd.add_option("--n-max", o.n_max, "lemma-m largest level");
  cmd.add_option("--t-eval", o.t_eval, "prop1 evaluation time");
  cmd.add_option("--trials", o.trials, "product-estimate-probe trials");
  cmd.add_option("--sigma-offsets", o.sigma_offsets, "norm-scaling offsets of sigma from s");
  cmd.add_flag("--quiet", o.quiet, "print verdicts only");
}

ex::ExperimentConfig resolve_config(const std::string& name, const Overrides& o) {
  ex::ExperimentConfig c = o.config_path.empty() ? ex::ExperimentConfig{} : ex::load_config(o.config_path);
  c.experiment = name;
  if (!o.out.empty()) c.out_dir = o.out;
  if (!o.n_list.empty()) c.n_list = split_list<int>(o.n_list, parse_int);
  if (!o.t_grid.empty()) c.t_grid = split_list<double>(o.t_grid, parse_real);
  if (!o.p_list.empty()) c.p_list = split_list<double>(o.p_list, parse_exp);
  if (!o.sigma_offsets.empty()) c.sigma_offsets = split_list<double>(o.sigma_offsets, parse_real);
  if (!o.s.empty()) c.s = parse_real(o.s);
  if (!o.p.empty()) c.p = parse_exp(o.p);
  if (!o.r.empty()) c.r = parse_exp(o.r);
  if (o.d) c.d = *o.d;
  if (o.seed) c.seed = *o.seed;
  if (o.resolution) c.resolution_override = *o.resolution;
  if (o.dt) c.dt = *o.dt;
  if (o.dt_max) c.dt_max = *o.dt_max;
  if (o.cfl) c.cfl = *o.cfl;
  if (o.n_max) c.n_max = *o.n_max;
  if (o.t_eval) c.t_eval = *o.t_eval;
  if (o.trials) c.trials = *o.trials;
  return c;
}

void print_result(const ex::CommandResult& res, bool quiet) {
  if (!quiet) {
    for (const auto& t : res.tables) {
      std::cout << "# " << t.name() << "\n";
      t.write_csv(std::cout);
    }
  }
  for (const auto& v : res.verdicts) {
    std::cout << (v.pass ? "PASS " : "FAIL ") << v.gate << ": " << ex::format_real(v.value) << " "
              << v.relation << " " << ex::format_real(v.threshold);
    if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Littlewood-Paley, Besov norm and pseudo-spectral Euler experiments"};
  app.require_subcommand(1);
  std::string isa;
  app.add_option("--isa", isa, "kernel set: scalar or avx2 (default: best available)");
  app.set_version_flag("--version", ex::code_version());

  auto* list = app.add_subcommand("list", "list the experiment commands");
  Overrides overrides;
  std::string chosen;
  for (const auto& info : ex::command_registry()) {
    auto* cmd = app.add_subcommand(info.name, info.summary);
    add_shared_options(*cmd, overrides);
    cmd->callback([&chosen, name = info.name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (list->parsed()) {
    for (const auto& info : ex::command_registry())
      std::printf("%-24s %s\n", info.name.c_str(), info.summary.c_str());
    return 0;
  }

  try {
    if (!isa.empty()) besov::kernels::select(besov::kernels::parse_isa(isa));
    const ex::ExperimentConfig config = resolve_config(chosen, overrides);
    for (const auto& info : ex::command_registry()) {
      if (info.name != chosen) continue;
      const auto start = std::chrono::steady_clock::now();
      const ex::CommandResult res = info.run(config);
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      ex::write_outputs(res, config, wall);
      print_result(res, overrides.quiet);
      return res.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
