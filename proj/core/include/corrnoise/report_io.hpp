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
 * CSV and JSON output. Every CSV starts with '#' lines naming the schema,
 * its version, the config hash and the seed, followed by a header row.
 * Numbers are written in shortest round-trip form.
 */
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "corrnoise/ramsey.hpp"
#include "corrnoise/scoring.hpp"
#include "corrnoise/simulate.hpp"

namespace corrnoise {

inline constexpr int kCsvSchemaVersion = 1;

std::string format_number(double x);

/// FNV-1a over the compact dump of `config`.
std::uint64_t config_hash(const nlohmann::json& config);
std::string hash_hex(std::uint64_t h);

struct CsvMeta {
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
};

/// Columns: t, F, infidelity, purity, d_g, d_c (d_g blank without a DFS).
void write_trajectory_csv(std::ostream& os, const TrajectoryReport& rep, const CsvMeta& meta);
/// Columns: r, c, final_infidelity, integrated_dc, n_realizations, converged, error.
void write_sweep_csv(std::ostream& os, const SweepGrid& grid, const CsvMeta& meta);
/// Columns: t, probability, predicted, realizations, converged.
void write_ramsey_csv(std::ostream& os, const RamseyResult& res, const std::vector<double>& predicted,
                      const CsvMeta& meta);
/// Columns: rank, label, d_A, n_gates, partial.
void write_score_csv(std::ostream& os, const Ranking& ranking, const CsvMeta& meta);
/// Columns: label, index, gate, qubits, theta, badness, weight_m, weight_mprime, unscored.
void write_gate_scores_csv(std::ostream& os, const Ranking& ranking, const CsvMeta& meta);

/// Fixed-width ranked table for terminals.
void write_score_table(std::ostream& os, const Ranking& ranking);

/// Largest value of `values`, or 0 for an empty list.
double max_of(const std::vector<double>& values);

/**
 * Run summary. Includes the factors that map max d_g and max d_c onto the
 * peak infidelity for overlays; stored columns are never rescaled.
 */
nlohmann::json trajectory_metadata(const TrajectoryReport& rep, const CsvMeta& meta);
nlohmann::json ramsey_metadata(const RamseyResult& res, const CsvMeta& meta);

}  // namespace corrnoise
