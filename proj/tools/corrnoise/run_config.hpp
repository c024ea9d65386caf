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

/**
 * @file
 * JSON run configuration shared by the CLI subcommands.
 *
 *     {
 *       "noise": {"base_sigma": 0.11, "r": 1, "c": 1},
 *       "static_fields": [0, 0],
 *       "ensemble": {"n_realizations_initial": 1000, "convergence_tol": 0.02,
 *                    "max_realizations": 64000, "gate_model": "continuous"},
 *       "time_grid": {"samples_per_gate": 8,
 *                     "ramsey_wait": {"start": 0, "stop": 2, "count": 41}},
 *       "seed": 1,
 *       "output_dir": "out",
 *       "initial_state": "00",
 *       "dfs": "-",
 *       "ramsey": {"shots": 0, "ratio_threshold": 2}
 *     }
 *
 * "noise" may also name a JSON file holding the noise object.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "corrnoise/linalg.hpp"
#include "corrnoise/measures.hpp"
#include "corrnoise/noise.hpp"
#include "corrnoise/simulate.hpp"

namespace corrnoise::cli {

/// Bad user input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WaitGrid {
  double start = 0.0;
  double stop = 2.0;
  int count = 41;

  std::vector<double> points() const;
};

struct RunConfig {
  std::optional<NoiseModel> noise;
  /// Present when the noise was given as {base_sigma, r, c}.
  std::optional<double> base_sigma;
  std::vector<double> static_fields;
  EnsembleConfig ensemble;
  WaitGrid ramsey_wait;
  std::size_t ramsey_shots = 0;
  double ratio_threshold = 2.0;
  std::filesystem::path output_dir = ".";
  std::optional<nlohmann::json> initial_state;
  std::optional<DfsSpec> dfs;

  /// Resolved noise; throws InputError if none was configured.
  const NoiseModel& require_noise() const;
  /// Static fields padded with zeros to n qubits.
  std::vector<double> fields_for(int n_qubits) const;
  StateVector initial_for(int n_qubits) const;

  /// Canonical form; excludes the thread count so hashes do not depend on it.
  nlohmann::json to_json() const;
  std::uint64_t hash() const;
};

/// `base_dir` resolves a noise file path given relative to the config file.
RunConfig run_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace corrnoise::cli
