// Copyright 2026 The corrnoise Authors
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

#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "commands.hpp"
#include "corrnoise/dsl.hpp"

namespace {

using namespace corrnoise;
using namespace corrnoise::cli;

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
  std::optional<std::size_t> realizations;
  std::optional<std::string> gate_model;
};

void add_overrides(CLI::App* sub, Overrides& o) {
  sub->add_option("--seed", o.seed, "RNG seed");
  sub->add_option("--output-dir", o.output_dir, "Directory for output files");
  sub->add_option("--realizations", o.realizations, "Fixed realization count (disables doubling)");
  sub->add_option("--gate-model", o.gate_model, "continuous or instantaneous");
}

RunConfig configure(const std::string& path, const Overrides& o, unsigned threads) {
  RunConfig cfg = load_run_config(path);
  if (o.seed) cfg.ensemble.rng_seed = *o.seed;
  if (o.output_dir) cfg.output_dir = *o.output_dir;
  if (o.realizations) {
    cfg.ensemble.n_realizations_initial = *o.realizations;
    cfg.ensemble.max_realizations = *o.realizations;
  }
  try {
    if (o.gate_model) cfg.ensemble.gate_model = gate_model_from_string(*o.gate_model);
    cfg.ensemble.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  cfg.ensemble.threads = resolve_thread_count(threads);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Few-qubit circuits under correlated quasi-static dephasing noise"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (default: $CORRNOISE_THREADS or all cores)");

  std::string config;
  std::string circuit;
  Overrides overrides;

  auto* simulate = app.add_subcommand("simulate", "Ensemble trajectory of one circuit");
  simulate->add_option("--config", config, "Run configuration JSON")->required();
  simulate->add_option("circuit", circuit, "Circuit DSL file")->required();
  add_overrides(simulate, overrides);

  std::vector<double> r_values;
  std::vector<double> c_values;
  std::optional<double> base_sigma;
  auto* sweep = app.add_subcommand("sweep", "Final infidelity and integrated d_c over an r-c grid");
  sweep->add_option("--config", config, "Run configuration JSON")->required();
  sweep->add_option("circuit", circuit, "Circuit DSL file")->required();
  sweep->add_option("--r", r_values, "Asymmetry values sigma_1 / sigma_2")->required()->delimiter(',');
  sweep->add_option("--c", c_values, "Correlation values")->required()->delimiter(',');
  sweep->add_option("--base-sigma", base_sigma, "sigma_2 for every cell");
  add_overrides(sweep, overrides);

  std::string variant = "both";
  auto* ramsey = app.add_subcommand("ramsey", "Simulated Ramsey correlation measurement");
  ramsey->add_option("--config", config, "Run configuration JSON")->required();
  ramsey->add_option("--variant", variant, "plus, minus, qubit1, qubit2, both or all");
  add_overrides(ramsey, overrides);

  std::vector<std::string> circuit_files;
  std::string dfs = "-";
  std::optional<std::string> score_out;
  auto* score = app.add_subcommand("score", "Rank circuits by d_A");
  score->add_option("circuits", circuit_files, "Circuit DSL files")->required();
  score->add_option("--dfs", dfs, "DFS sign (+ or -) or a DFS JSON file");
  score->add_option("--output-dir", score_out, "Write score.csv and gate_scores.csv here");

  std::optional<std::string> write_dir;
  auto* circuits = app.add_subcommand("circuits", "List the built-in circuits");
  circuits->add_option("--write", write_dir, "Write their DSL files into this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*simulate) return cmd_simulate(configure(config, overrides, threads), circuit, std::cout);
    if (*sweep) return cmd_sweep(configure(config, overrides, threads), circuit, r_values, c_values, base_sigma, std::cout);
    if (*ramsey) return cmd_ramsey(configure(config, overrides, threads), variant, std::cout);
    if (*score) {
      std::vector<std::filesystem::path> paths(circuit_files.begin(), circuit_files.end());
      std::optional<std::filesystem::path> out;
      if (score_out) out = *score_out;
      return cmd_score(paths, dfs, out, std::cout);
    }
    if (*circuits) {
      std::optional<std::filesystem::path> dir;
      if (write_dir) dir = *write_dir;
      return cmd_circuits(dir, std::cout);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << circuit << ": " << e.what() << '\n';
    return kExitInput;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitWarning;
  }
  return kExitOk;
}
