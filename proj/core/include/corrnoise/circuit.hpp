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
 * Circuit intermediate representation and the gate library.
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrnoise/linalg.hpp"

namespace corrnoise {

enum class GateKind { I, X, Y, Z, H, S, RX, RY, RZ, CNOT, CZ, SWAP, SQRTSWAP, WAIT };

std::string_view gate_name(GateKind kind);
/// Case-insensitive lookup; nullopt for unknown names.
std::optional<GateKind> gate_from_name(std::string_view name);
/// True for RX, RY, RZ.
bool gate_takes_angle(GateKind kind);
/// Number of operand qubits; WAIT accepts any number (including none).
std::optional<int> gate_arity(GateKind kind);

struct GateOp {
  GateKind kind = GateKind::I;
  std::vector<int> qubits;       ///< 1-based; for CNOT the control comes first
  std::optional<double> theta;   ///< rotation angle in rad, RX/RY/RZ only
  double duration = 1.0;

  bool operator==(const GateOp&) const = default;
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate_gate(const GateOp& op, int n_qubits);

class Circuit {
 public:
  Circuit(int n_qubits, std::vector<GateOp> ops = {}, std::string label = {});

  int n_qubits() const { return n_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  Circuit& append(GateOp op);
  double total_duration() const;

  bool operator==(const Circuit&) const = default;

 private:
  int n_qubits_;
  std::vector<GateOp> ops_;
  std::string label_;
};

/// The gate's matrix on its own operands (2x2 or 4x4; 1x1 for an operand-free WAIT).
CMatrix gate_local_matrix(const GateOp& op);

/**
 * Dimensionless generator A on the operands with exp(-i A) equal to
 * gate_local_matrix(op) exactly. Driving the gate for a duration d uses the
 * constant Hamiltonian A / d.
 */
CMatrix gate_local_generator(const GateOp& op);

/// The gate unitary embedded in the n-qubit space; WAIT and I give identity.
Operator gate_unitary(const GateOp& op, int n_qubits);
Operator gate_generator(const GateOp& op, int n_qubits);

/// Applies each gate unitary in order (no free evolution, no noise).
StateVector apply_circuit(const Circuit& circuit, const StateVector& initial);

}  // namespace corrnoise
