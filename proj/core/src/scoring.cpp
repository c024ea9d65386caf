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

#include "corrnoise/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace corrnoise {
namespace {

double combine(const std::vector<GateScore>& scores) {
  double acc = 0.0;
  for (const auto& s : scores) acc += s.badness * s.badness;
  return std::sqrt(acc);
}

std::string pair_name(const QubitPair& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

QubitPair ordered(QubitPair p) {
  if (p.first > p.second) std::swap(p.first, p.second);
  return p;
}

// DFS over `qubits` (ascending) built from the pair specs; a state belongs to
// it when every pair's two bits form a DFS state of that pair.
DfsSpec tensor_dfs(const std::vector<int>& qubits, const std::vector<const std::pair<const QubitPair, DfsSpec>*>& pairs) {
  const int m = static_cast<int>(qubits.size());
  auto local_pos = [&](int q) {
    return static_cast<int>(std::find(qubits.begin(), qubits.end(), q) - qubits.begin()) + 1;
  };
  std::vector<std::uint64_t> basis;
  for (std::uint64_t s = 0; s < hilbert_dim(m); ++s) {
    bool inside = true;
    for (const auto* entry : pairs) {
      const auto [a, b] = entry->first;
      const std::uint64_t hi = (s >> bit_of(local_pos(a), m)) & 1U;
      const std::uint64_t lo = (s >> bit_of(local_pos(b), m)) & 1U;
      inside = inside && entry->second.contains((hi << 1) | lo);
    }
    if (inside) basis.push_back(s);
  }
  return DfsSpec(m, std::move(basis));
}

}  // namespace

GateScore badness(const GateOp& gate, const DfsSpec& dfs, int n_qubits) {
  validate_gate(gate, n_qubits);
  if (dfs.n_qubits() != n_qubits) throw std::invalid_argument("DFS and gate act on different qubit counts");
  GateScore score;
  score.gate = gate;
  if (gate.kind == GateKind::WAIT || gate.kind == GateKind::I) return score;

  const CMatrix g = gate_local_matrix(gate);
  const int k = static_cast<int>(gate.qubits.size());
  std::vector<int> shift(static_cast<std::size_t>(k));
  std::uint64_t mask = 0;
  for (int j = 0; j < k; ++j) {
    shift[static_cast<std::size_t>(j)] = bit_of(gate.qubits[static_cast<std::size_t>(j)], n_qubits);
    mask |= std::uint64_t{1} << shift[static_cast<std::size_t>(j)];
  }
  auto local_index = [&](std::uint64_t state) {
    std::uint64_t loc = 0;
    for (int j = 0; j < k; ++j) loc |= ((state >> shift[static_cast<std::size_t>(j)]) & 1U) << (k - 1 - j);
    return static_cast<Eigen::Index>(loc);
  };
  auto with_local = [&](std::uint64_t state, std::uint64_t loc) {
    state &= ~mask;
    for (int j = 0; j < k; ++j) state |= ((loc >> (k - 1 - j)) & 1U) << shift[static_cast<std::size_t>(j)];
    return state;
  };

  const std::uint64_t local_dim = hilbert_dim(k);
  for (std::uint64_t d : dfs.basis_states()) {
    const Eigen::Index ld = local_index(d);
    for (std::uint64_t loc = 0; loc < local_dim; ++loc) {
      if (dfs.contains(with_local(d, loc))) continue;
      const auto li = static_cast<Eigen::Index>(loc);
      score.weight_mprime += std::norm(g(li, ld));
      score.weight_m += std::norm(g(ld, li));
    }
  }
  score.badness = 0.25 * std::sqrt(score.weight_m + score.weight_mprime);
  return score;
}

CircuitScore score_circuit(const Circuit& circuit, const DfsSpec& dfs) {
  CircuitScore out;
  out.label = circuit.label();
  for (const auto& op : circuit.ops()) out.gate_scores.push_back(badness(op, dfs, circuit.n_qubits()));
  out.d_A = combine(out.gate_scores);
  return out;
}

Ranking rank_circuits(const std::vector<Circuit>& candidates, const DfsSpec& dfs, const RankOptions& opts) {
  if (candidates.empty()) throw std::invalid_argument("no candidate circuits to rank");
  Ranking r;
  for (const auto& c : candidates) r.scores.push_back(score_circuit(c, dfs));

  for (const auto& input : opts.equivalence_inputs) {
    const StateVector ref = apply_circuit(candidates.front(), input);
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      const double f = fidelity(ref, apply_circuit(candidates[i], input));
      if (f < 1.0 - opts.equivalence_tol) {
        r.warnings.push_back("circuits '" + candidates.front().label() + "' and '" + candidates[i].label() +
                             "' disagree on a test input (fidelity " + std::to_string(f) + ")");
      }
    }
  }

  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& sa = r.scores[a];
    const auto& sb = r.scores[b];
    if (sa.d_A != sb.d_A) return sa.d_A < sb.d_A;
    if (candidates[a].size() != candidates[b].size()) return candidates[a].size() < candidates[b].size();
    return sa.label < sb.label;
  });
  std::vector<CircuitScore> sorted;
  for (std::size_t i : order) sorted.push_back(std::move(r.scores[i]));
  r.scores = std::move(sorted);
  return r;
}

PairwiseAssignment pairwise_dfs_assignment(const std::map<QubitPair, std::string>& verdicts,
                                           const std::vector<QubitPair>& required) {
  PairwiseAssignment a;
  for (const auto& [raw, sign] : verdicts) {
    const QubitPair p = ordered(raw);
    if (p.first < 1 || p.first == p.second) {
      a.issues.push_back("invalid qubit pair " + pair_name(raw));
      continue;
    }
    if (sign == "none") {
      a.unassigned.push_back(p);
    } else if (sign == "+" || sign == "-") {
      a.dfs.emplace(p, DfsSpec::from_sign(sign));
    } else {
      a.issues.push_back("pair " + pair_name(p) + " has unknown verdict '" + sign + "'");
    }
  }
  for (const auto& raw : required) {
    const QubitPair p = ordered(raw);
    const bool present = std::any_of(verdicts.begin(), verdicts.end(),
                                     [&](const auto& kv) { return ordered(kv.first) == p; });
    if (!present) a.issues.push_back("no verdict for pair " + pair_name(p));
  }
  return a;
}

CircuitScore score_circuit_pairwise(const Circuit& circuit, const PairwiseAssignment& assignment) {
  CircuitScore out;
  out.label = circuit.label();
  for (const auto& op : circuit.ops()) {
    GateScore score;
    score.gate = op;
    if (op.kind == GateKind::WAIT || op.kind == GateKind::I) {
      out.gate_scores.push_back(score);
      continue;
    }
    std::vector<const std::pair<const QubitPair, DfsSpec>*> used;
    const auto exact = op.qubits.size() == 2
                           ? assignment.dfs.find(ordered({op.qubits[0], op.qubits[1]}))
                           : assignment.dfs.end();
    if (exact != assignment.dfs.end()) {
      used.push_back(&*exact);
    } else {
      for (int q : op.qubits) {
        const auto it = std::find_if(assignment.dfs.begin(), assignment.dfs.end(), [&](const auto& kv) {
          return kv.first.first == q || kv.first.second == q;
        });
        if (it == assignment.dfs.end()) {
          used.clear();
          break;
        }
        if (std::find(used.begin(), used.end(), &*it) == used.end()) used.push_back(&*it);
      }
    }
    std::set<int> span;
    for (const auto* entry : used) {
      span.insert(entry->first.first);
      span.insert(entry->first.second);
    }
    if (used.empty() || span.size() != 2 * used.size()) {
      score.unscored = true;
      out.partial = true;
      out.gate_scores.push_back(score);
      continue;
    }
    const std::vector<int> qubits(span.begin(), span.end());
    GateOp local = op;
    for (int& q : local.qubits) {
      q = static_cast<int>(std::find(qubits.begin(), qubits.end(), q) - qubits.begin()) + 1;
    }
    const DfsSpec dfs = tensor_dfs(qubits, used);
    GateScore s = badness(local, dfs, static_cast<int>(qubits.size()));
    s.gate = op;
    out.gate_scores.push_back(std::move(s));
  }
  out.d_A = combine(out.gate_scores);
  return out;
}

}  // namespace corrnoise
