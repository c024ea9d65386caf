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
 * Subcommands. Each returns the process exit code: 0 on success, 2 for bad
 * input, 3 when results were written but carry a convergence warning.
 */
#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace corrnoise::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitWarning = 3;

/// Writes <label>_trajectory.csv and <label>_trajectory.json.
int cmd_simulate(const RunConfig& cfg, const std::filesystem::path& circuit_file, std::ostream& out);

/// Writes <label>_sweep.csv. base_sigma falls back to the config's noise shorthand.
int cmd_sweep(const RunConfig& cfg, const std::filesystem::path& circuit_file, const std::vector<double>& r_values,
              const std::vector<double>& c_values, std::optional<double> base_sigma, std::ostream& out);

/**
 * `variant` is plus, minus, qubit1, qubit2, both (plus and minus) or all.
 * With plus and minus present the DFS verdict is printed and stored in
 * ramsey_summary.json; with all four the correlation estimate is added.
 */
int cmd_ramsey(const RunConfig& cfg, const std::string& variant, std::ostream& out);

/// `dfs` is a sign ("+", "-") or a JSON file. Prints the ranked table and writes CSVs if output_dir is set.
int cmd_score(const std::vector<std::filesystem::path>& circuit_files, const std::string& dfs,
              const std::optional<std::filesystem::path>& output_dir, std::ostream& out);

/// Lists the built-in circuits; writes their DSL files when `write_dir` is set.
int cmd_circuits(const std::optional<std::filesystem::path>& write_dir, std::ostream& out);

}  // namespace corrnoise::cli
