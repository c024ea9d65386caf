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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "corrnoise/canonical.hpp"
#include "corrnoise/dsl.hpp"
#include "corrnoise/ramsey.hpp"
#include "corrnoise/report_io.hpp"
#include "corrnoise/scoring.hpp"

namespace corrnoise::cli {
namespace fs = std::filesystem;

namespace {

std::ofstream open_output(const fs::path& dir, const std::string& name) {
  fs::create_directories(dir);
  std::ofstream os(dir / name, std::ios::binary);
  if (!os) throw InputError("cannot write '" + (dir / name).string() + "'");
  return os;
}

void write_json(const fs::path& dir, const std::string& name, const nlohmann::json& j) {
  auto os = open_output(dir, name);
  os << j.dump(2) << '\n';
}

std::string fixed(double x, int digits = 6) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

std::vector<RamseyVariant> variants_for(const std::string& name) {
  if (name == "both") return {RamseyVariant::kPlus, RamseyVariant::kMinus};
  if (name == "all") return {RamseyVariant::kPlus, RamseyVariant::kMinus, RamseyVariant::kQubit1, RamseyVariant::kQubit2};
  try {
    return {ramsey_variant_from_string(name)};
  } catch (const std::exception&) {
    throw InputError("unknown Ramsey variant '" + name + "'");
  }
}

}  // namespace

int cmd_simulate(const RunConfig& cfg, const fs::path& circuit_file, std::ostream& out) {
  const Circuit circuit = load_circuit_file(circuit_file);
  const int n = circuit.n_qubits();
  const NoiseModel& noise = cfg.require_noise();
  if (noise.n_qubits() != n) throw InputError("noise model and circuit have different qubit counts");
  if (cfg.dfs && cfg.dfs->n_qubits() != n) throw InputError("DFS and circuit have different qubit counts");

  EnsembleConfig ens = cfg.ensemble;
  ens.keep_density_matrices = false;
  const auto rep = run_ensemble(circuit, cfg.initial_for(n), cfg.fields_for(n), noise, ens, cfg.dfs);

  const CsvMeta meta{cfg.hash(), cfg.ensemble.rng_seed};
  {
    auto os = open_output(cfg.output_dir, circuit.label() + "_trajectory.csv");
    write_trajectory_csv(os, rep, meta);
  }
  nlohmann::json md = trajectory_metadata(rep, meta);
  md["circuit"] = circuit.label();
  md["config"] = cfg.to_json();
  write_json(cfg.output_dir, circuit.label() + "_trajectory.json", md);

  out << circuit.label() << ": final 1-F = " << fixed(rep.final_infidelity()) << " +/- "
      << fixed(rep.final_infidelity_stderr, 2) << ", purity = " << fixed(rep.final_purity())
      << ", realizations = " << rep.n_realizations_used << '\n';
  if (!rep.converged) {
    out << "warning: ensemble did not converge within max_realizations\n";
    return kExitWarning;
  }
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, const fs::path& circuit_file, const std::vector<double>& r_values,
              const std::vector<double>& c_values, std::optional<double> base_sigma, std::ostream& out) {
  const Circuit circuit = load_circuit_file(circuit_file);
  if (!base_sigma) base_sigma = cfg.base_sigma;
  if (!base_sigma) throw InputError("sweep needs --base-sigma or a {base_sigma, r, c} noise entry");
  if (r_values.empty() || c_values.empty()) throw InputError("sweep needs non-empty r and c lists");
  const int n = circuit.n_qubits();
  SweepGrid grid;
  try {
    grid = sweep_rc(circuit, cfg.initial_for(n), cfg.fields_for(n), r_values, c_values, *base_sigma, cfg.ensemble);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const CsvMeta meta{cfg.hash(), cfg.ensemble.rng_seed};
  auto os = open_output(cfg.output_dir, circuit.label() + "_sweep.csv");
  write_sweep_csv(os, grid, meta);

  bool failed = false;
  for (const auto& cell : grid.cells) {
    if (!cell.error.empty()) {
      failed = true;
      out << "r=" << fixed(cell.r) << " c=" << fixed(cell.c) << ": " << cell.error << '\n';
    }
  }
  out << circuit.label() << ": " << grid.cells.size() << " cells written\n";
  if (failed || !grid.all_converged()) {
    out << "warning: some cells failed or did not converge\n";
    return kExitWarning;
  }
  return kExitOk;
}

int cmd_ramsey(const RunConfig& cfg, const std::string& variant, std::ostream& out) {
  const NoiseModel& noise = cfg.require_noise();
  if (noise.n_qubits() != 2) throw InputError("Ramsey experiments need a two-qubit noise model");
  const auto fields = cfg.fields_for(2);
  const auto grid = cfg.ramsey_wait.points();
  const CsvMeta meta{cfg.hash(), cfg.ensemble.rng_seed};

  std::map<RamseyVariant, RamseyResult> results;
  bool converged = true;
  for (RamseyVariant v : variants_for(variant)) {
    auto res = run_ramsey(v, grid, fields, noise, cfg.ensemble, RamseyOptions{cfg.ramsey_shots});
    std::vector<double> predicted;
    for (double t : grid) predicted.push_back(ramsey_prediction(v, t, fields, noise));
    const std::string name(to_string(v));
    {
      auto os = open_output(cfg.output_dir, "ramsey_" + name + ".csv");
      write_ramsey_csv(os, res, predicted, meta);
    }
    write_json(cfg.output_dir, "ramsey_" + name + ".json", ramsey_metadata(res, meta));
    out << name << ": sigma^2 = " << fixed(res.fit.sigma2) << ", omega = " << fixed(res.fit.omega)
        << ", T2 = " << (res.fit.infinite_t2 ? std::string("inf") : fixed(res.t2_effective)) << '\n';
    converged = converged && res.all_converged();
    results.emplace(v, std::move(res));
  }

  nlohmann::json summary;
  summary["config_hash"] = hash_hex(meta.config_hash);
  summary["seed"] = meta.seed;
  const auto plus = results.find(RamseyVariant::kPlus);
  const auto minus = results.find(RamseyVariant::kMinus);
  if (plus != results.end() && minus != results.end()) {
    const std::string verdict = classify_dfs(plus->second.t2_effective, minus->second.t2_effective, cfg.ratio_threshold);
    summary["verdict"] = verdict;
    summary["ratio_threshold"] = cfg.ratio_threshold;
    out << "DFS verdict: " << verdict << '\n';
    const auto q1 = results.find(RamseyVariant::kQubit1);
    const auto q2 = results.find(RamseyVariant::kQubit2);
    if (q1 != results.end() && q2 != results.end()) {
      const double u = sum_rule_uncertainty(plus->second.fit, minus->second.fit, q1->second.fit, q2->second.fit);
      const auto est = extract_s12(plus->second.fit.sigma2, minus->second.fit.sigma2, q1->second.fit.sigma2,
                                   q2->second.fit.sigma2, u);
      summary["s12_hat"] = est.s12_hat;
      summary["c_hat"] = std::isfinite(est.c_hat) ? nlohmann::json(est.c_hat) : nlohmann::json(nullptr);
      summary["sum_rule_residual"] = est.sum_rule_residual;
      summary["sum_rule_warning"] = est.sum_rule_warning;
      out << "s12 = " << fixed(est.s12_hat) << ", c = " << fixed(est.c_hat) << '\n';
      if (est.sum_rule_warning) out << "warning: sum rule violated beyond fit uncertainty\n";
    }
  }
  write_json(cfg.output_dir, "ramsey_summary.json", summary);
  if (!converged) {
    out << "warning: some Ramsey points did not converge\n";
    return kExitWarning;
  }
  return kExitOk;
}

int cmd_score(const std::vector<fs::path>& circuit_files, const std::string& dfs_arg,
              const std::optional<fs::path>& output_dir, std::ostream& out) {
  if (circuit_files.empty()) throw InputError("no circuit files given");
  std::vector<Circuit> circuits;
  for (const auto& f : circuit_files) circuits.push_back(load_circuit_file(f));

  DfsSpec dfs = DfsSpec::minus();
  if (dfs_arg == "+" || dfs_arg == "-" || dfs_arg == "plus" || dfs_arg == "minus") {
    dfs = DfsSpec::from_sign(dfs_arg);
  } else {
    std::ifstream in(dfs_arg);
    if (!in) throw InputError("cannot open DFS file '" + dfs_arg + "'");
    try {
      dfs = dfs_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      throw InputError("'" + dfs_arg + "': " + e.what());
    }
  }
  for (const auto& c : circuits) {
    if (c.n_qubits() != dfs.n_qubits()) {
      throw InputError("circuit '" + c.label() + "' and the DFS have different qubit counts");
    }
  }

  RankOptions opts;
  opts.equivalence_inputs.push_back(StateVector::basis(dfs.n_qubits(), 0));
  const Ranking ranking = rank_circuits(circuits, dfs, opts);
  write_score_table(out, ranking);
  if (output_dir) {
    nlohmann::json j = {{"dfs", to_json(dfs)}};
    for (const auto& f : circuit_files) j["circuits"].push_back(f.filename().string());
    const CsvMeta meta{config_hash(j), 0};
    {
      auto os = open_output(*output_dir, "score.csv");
      write_score_csv(os, ranking, meta);
    }
    auto os = open_output(*output_dir, "gate_scores.csv");
    write_gate_scores_csv(os, ranking, meta);
  }
  return kExitOk;
}

int cmd_circuits(const std::optional<fs::path>& write_dir, std::ostream& out) {
  const DfsSpec dfs = DfsSpec::minus();
  for (std::string_view label : canonical_labels()) {
    const Circuit c = canonical_circuit(label);
    out << label << ": " << c.size() << " gates, duration " << fixed(c.total_duration())
        << ", d_A(-) = " << fixed(score_circuit(c, dfs).d_A) << '\n';
    if (write_dir) {
      auto os = open_output(*write_dir, std::string(label) + ".circ");
      os << format_circuit(c);
    }
  }
  return kExitOk;
}

}  // namespace corrnoise::cli
