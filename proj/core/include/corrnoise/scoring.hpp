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
 * Gate badness against a DFS and circuit scores built from it.
 *
 * With the DFS basis ordered first, a gate splits as G = (G_par M; M' G_perp).
 * B(G) = 1/4 sqrt(sum |M|^2 + sum |M'|^2) and d_A = sqrt(sum_G B(G)^2).
 * Only the gate's local matrix is used; no state vectors are formed.
 */
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corrnoise/circuit.hpp"
#include "corrnoise/measures.hpp"

namespace corrnoise {

struct GateScore {
  GateOp gate;
  double badness = 0.0;
  double weight_m = 0.0;       ///< sum |M|^2 (DFS rows, complement columns)
  double weight_mprime = 0.0;  ///< sum |M'|^2 (complement rows, DFS columns)
  /// Set when no DFS was available for this gate and it was scored 0.
  bool unscored = false;
};

struct CircuitScore {
  std::string label;
  std::vector<GateScore> gate_scores;
  double d_A = 0.0;
  /// Some gates had no DFS and were given zero badness.
  bool partial = false;
};

GateScore badness(const GateOp& gate, const DfsSpec& dfs, int n_qubits);

CircuitScore score_circuit(const Circuit& circuit, const DfsSpec& dfs);

struct RankOptions {
  /// Inputs on which every candidate must agree with the first (up to phase).
  std::vector<StateVector> equivalence_inputs;
  double equivalence_tol = 1e-9;
};

struct Ranking {
  std::vector<CircuitScore> scores;  ///< ascending d_A
  std::vector<std::string> warnings;
};

/// Ascending d_A; ties by fewer gates, then by label.
Ranking rank_circuits(const std::vector<Circuit>& candidates, const DfsSpec& dfs, const RankOptions& opts = {});

using QubitPair = std::pair<int, int>;

struct PairwiseAssignment {
  std::map<QubitPair, DfsSpec> dfs;  ///< keys ordered (low, high)
  std::vector<QubitPair> unassigned; ///< classified "none"
  std::vector<std::string> issues;
};

/**
 * Builds two-qubit DFS specs from "+"/"-"/"none" verdicts. Pairs listed in
 * `required` but absent from `verdicts` are reported in `issues`.
 */
PairwiseAssignment pairwise_dfs_assignment(const std::map<QubitPair, std::string>& verdicts,
                                           const std::vector<QubitPair>& required = {});

/**
 * Scores each gate against the DFS of the pair(s) holding its qubits, using
 * the tensor-product DFS when two pairs are involved. Gates on unassigned or
 * "none" qubits score 0 and mark the result partial.
 */
CircuitScore score_circuit_pairwise(const Circuit& circuit, const PairwiseAssignment& assignment);

}  // namespace corrnoise
