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

#include "run_config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "corrnoise/report_io.hpp"

namespace corrnoise::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw InputError("unknown key '" + key + "' in " + where);
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
}

}  // namespace

std::vector<double> WaitGrid::points() const {
  if (count < 8) throw InputError("ramsey_wait.count must be >= 8");
  if (!(stop > start) || start < 0.0) throw InputError("ramsey_wait needs 0 <= start < stop");
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(start + (stop - start) * i / (count - 1));
  return out;
}

const NoiseModel& RunConfig::require_noise() const {
  if (!noise) throw InputError("config has no 'noise' entry");
  return *noise;
}

std::vector<double> RunConfig::fields_for(int n_qubits) const {
  if (static_fields.size() > static_cast<std::size_t>(n_qubits)) {
    throw InputError("static_fields has more entries than the circuit has qubits");
  }
  std::vector<double> out = static_fields;
  out.resize(static_cast<std::size_t>(n_qubits), 0.0);
  return out;
}

StateVector RunConfig::initial_for(int n_qubits) const {
  if (!initial_state) return StateVector::basis(n_qubits, 0);
  const json& j = *initial_state;
  if (j.is_string()) {
    auto psi = StateVector::from_bits(j.get<std::string>());
    if (psi.n_qubits() != n_qubits) throw InputError("initial_state has the wrong number of qubits");
    return psi;
  }
  if (j.is_object() && j.contains("amplitudes")) {
    CVector amps(static_cast<Eigen::Index>(j["amplitudes"].size()));
    Eigen::Index k = 0;
    for (const auto& a : j["amplitudes"]) {
      amps[k++] = a.is_array() ? Complex(a.at(0).get<double>(), a.at(1).get<double>()) : Complex(a.get<double>(), 0);
    }
    if (static_cast<std::uint64_t>(amps.size()) != hilbert_dim(n_qubits)) {
      throw InputError("initial_state has the wrong number of amplitudes");
    }
    return StateVector::normalized(n_qubits, amps);
  }
  throw InputError("initial_state must be a bit string or {\"amplitudes\": [...]}");
}

json RunConfig::to_json() const {
  json j;
  if (noise) j["noise"] = corrnoise::to_json(*noise);
  if (base_sigma) j["base_sigma"] = *base_sigma;
  j["static_fields"] = static_fields;
  j["ensemble"] = {{"n_realizations_initial", ensemble.n_realizations_initial},
                   {"convergence_tol", ensemble.convergence_tol},
                   {"max_realizations", ensemble.max_realizations},
                   {"gate_model", std::string(to_string(ensemble.gate_model))}};
  j["time_grid"] = {{"samples_per_gate", ensemble.time_samples_per_gate},
                    {"ramsey_wait", {{"start", ramsey_wait.start}, {"stop", ramsey_wait.stop}, {"count", ramsey_wait.count}}}};
  j["seed"] = ensemble.rng_seed;
  j["ramsey"] = {{"shots", ramsey_shots}, {"ratio_threshold", ratio_threshold}};
  if (initial_state) j["initial_state"] = *initial_state;
  if (dfs) j["dfs"] = corrnoise::to_json(*dfs);
  return j;
}

std::uint64_t RunConfig::hash() const { return config_hash(to_json()); }

RunConfig run_config_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  reject_unknown(j, {"noise", "static_fields", "ensemble", "time_grid", "seed", "output_dir", "initial_state", "dfs",
                     "ramsey"},
                 "config");
  RunConfig cfg;
  try {
    if (j.contains("noise")) {
      json noise = j["noise"];
      if (noise.is_string()) noise = read_json_file(base_dir / noise.get<std::string>());
      cfg.noise = noise_model_from_json(noise);
      if (noise.contains("base_sigma")) cfg.base_sigma = noise["base_sigma"].get<double>();
    }
    if (j.contains("static_fields")) cfg.static_fields = j["static_fields"].get<std::vector<double>>();
    if (j.contains("ensemble")) {
      const json& e = j["ensemble"];
      reject_unknown(e, {"n_realizations_initial", "convergence_tol", "max_realizations", "gate_model"}, "ensemble");
      cfg.ensemble.n_realizations_initial = e.value("n_realizations_initial", cfg.ensemble.n_realizations_initial);
      cfg.ensemble.convergence_tol = e.value("convergence_tol", cfg.ensemble.convergence_tol);
      cfg.ensemble.max_realizations = e.value("max_realizations", cfg.ensemble.max_realizations);
      if (e.contains("gate_model")) cfg.ensemble.gate_model = gate_model_from_string(e["gate_model"].get<std::string>());
    }
    if (j.contains("time_grid")) {
      const json& t = j["time_grid"];
      reject_unknown(t, {"samples_per_gate", "ramsey_wait"}, "time_grid");
      cfg.ensemble.time_samples_per_gate = t.value("samples_per_gate", cfg.ensemble.time_samples_per_gate);
      if (t.contains("ramsey_wait")) {
        const json& w = t["ramsey_wait"];
        reject_unknown(w, {"start", "stop", "count"}, "time_grid.ramsey_wait");
        cfg.ramsey_wait.start = w.value("start", cfg.ramsey_wait.start);
        cfg.ramsey_wait.stop = w.value("stop", cfg.ramsey_wait.stop);
        cfg.ramsey_wait.count = w.value("count", cfg.ramsey_wait.count);
      }
    }
    cfg.ensemble.rng_seed = j.value("seed", cfg.ensemble.rng_seed);
    if (j.contains("output_dir")) cfg.output_dir = j["output_dir"].get<std::string>();
    if (j.contains("initial_state")) cfg.initial_state = j["initial_state"];
    if (j.contains("dfs")) cfg.dfs = dfs_from_json(j["dfs"]);
    if (j.contains("ramsey")) {
      const json& r = j["ramsey"];
      reject_unknown(r, {"shots", "ratio_threshold"}, "ramsey");
      cfg.ramsey_shots = r.value("shots", cfg.ramsey_shots);
      cfg.ratio_threshold = r.value("ratio_threshold", cfg.ratio_threshold);
    }
    cfg.ensemble.validate();
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid config: ") + e.what());
  }
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return run_config_from_json(read_json_file(path), path.parent_path().empty() ? "." : path.parent_path());
}

}  // namespace corrnoise::cli
