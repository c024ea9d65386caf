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

#include "corrnoise/circuit.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace corrnoise {
namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int arity;  // -1 for "any"
  bool angle;
};

constexpr std::array<GateInfo, 14> kGates{{
    {GateKind::I, "I", 1, false},
    {GateKind::X, "X", 1, false},
    {GateKind::Y, "Y", 1, false},
    {GateKind::Z, "Z", 1, false},
    {GateKind::H, "H", 1, false},
    {GateKind::S, "S", 1, false},
    {GateKind::RX, "RX", 1, true},
    {GateKind::RY, "RY", 1, true},
    {GateKind::RZ, "RZ", 1, true},
    {GateKind::CNOT, "CNOT", 2, false},
    {GateKind::CZ, "CZ", 2, false},
    {GateKind::SWAP, "SWAP", 2, false},
    {GateKind::SQRTSWAP, "SQRTSWAP", 2, false},
    {GateKind::WAIT, "WAIT", -1, false},
}};

const GateInfo& info(GateKind kind) {
  for (const auto& g : kGates) {
    if (g.kind == kind) return g;
  }
  throw std::logic_error("unknown gate kind");
}

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

CMatrix swap_matrix() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 1.0;
  m(1, 2) = m(2, 1) = 1.0;
  return m;
}

// For an involutory Hermitian unitary U: exp(-i pi (I - U) / 2) = U.
CMatrix involution_generator(const CMatrix& u) {
  const auto d = u.rows();
  return (kPi / 2.0) * (CMatrix::Identity(d, d) - u);
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& g : kGates) {
    if (g.name == upper) return g.kind;
  }
  return std::nullopt;
}

bool gate_takes_angle(GateKind kind) { return info(kind).angle; }

std::optional<int> gate_arity(GateKind kind) {
  const int a = info(kind).arity;
  if (a < 0) return std::nullopt;
  return a;
}

void validate_gate(const GateOp& op, int n_qubits) {
  const auto name = std::string(gate_name(op.kind));
  if (const auto arity = gate_arity(op.kind);
      arity && static_cast<int>(op.qubits.size()) != *arity) {
    throw std::invalid_argument(name + " takes " + std::to_string(*arity) + " operand(s)");
  }
  for (std::size_t i = 0; i < op.qubits.size(); ++i) {
    const int q = op.qubits[i];
    if (q < 1 || q > n_qubits) {
      throw std::invalid_argument(name + " operand " + std::to_string(q) + " outside [1, " +
                                  std::to_string(n_qubits) + "]");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (op.qubits[j] == q) throw std::invalid_argument(name + " has duplicate operand " + std::to_string(q));
    }
  }
  if (gate_takes_angle(op.kind) != op.theta.has_value()) {
    throw std::invalid_argument(gate_takes_angle(op.kind) ? name + " requires an angle"
                                                          : name + " does not take an angle");
  }
  if (op.theta && !std::isfinite(*op.theta)) throw std::invalid_argument(name + " angle is not finite");
  if (!(op.duration >= 0.0) || !std::isfinite(op.duration)) {
    throw std::invalid_argument(name + " duration must be finite and >= 0");
  }
}

// ---------------------------------------------------------------------------

Circuit::Circuit(int n_qubits, std::vector<GateOp> ops, std::string label)
    : n_qubits_(n_qubits), label_(std::move(label)) {
  check_qubit_count(n_qubits);
  ops_.reserve(ops.size());
  for (auto& op : ops) append(std::move(op));
}

Circuit& Circuit::append(GateOp op) {
  validate_gate(op, n_qubits_);
  ops_.push_back(std::move(op));
  return *this;
}

double Circuit::total_duration() const {
  double total = 0.0;
  for (const auto& op : ops_) total += op.duration;
  return total;
}

// ---------------------------------------------------------------------------

CMatrix gate_local_matrix(const GateOp& op) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (op.kind) {
    case GateKind::I: return CMatrix::Identity(2, 2);
    case GateKind::X: return mat2(0.0, 1.0, 1.0, 0.0);
    case GateKind::Y: return mat2(0.0, -kI, kI, 0.0);
    case GateKind::Z: return mat2(1.0, 0.0, 0.0, -1.0);
    case GateKind::H: return mat2(inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2);
    case GateKind::S: return mat2(1.0, 0.0, 0.0, kI);
    case GateKind::RX: {
      const double c = std::cos(*op.theta / 2.0);
      const double s = std::sin(*op.theta / 2.0);
      return mat2(c, -kI * s, -kI * s, c);
    }
    case GateKind::RY: {
      const double c = std::cos(*op.theta / 2.0);
      const double s = std::sin(*op.theta / 2.0);
      return mat2(c, -s, s, c);
    }
    case GateKind::RZ: {
      const double h = *op.theta / 2.0;
      return mat2(std::polar(1.0, -h), 0.0, 0.0, std::polar(1.0, h));
    }
    case GateKind::CNOT: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = 1.0;
      m(2, 3) = m(3, 2) = 1.0;
      return m;
    }
    case GateKind::CZ: {
      CMatrix m = CMatrix::Identity(4, 4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::SWAP: return swap_matrix();
    case GateKind::SQRTSWAP: {
      CMatrix m = CMatrix::Zero(4, 4);
      m(0, 0) = m(3, 3) = 1.0;
      m(1, 1) = m(2, 2) = Complex(0.5, 0.5);
      m(1, 2) = m(2, 1) = Complex(0.5, -0.5);
      return m;
    }
    case GateKind::WAIT: {
      const auto d = Eigen::Index{1} << op.qubits.size();
      return CMatrix::Identity(d, d);
    }
  }
  throw std::logic_error("unhandled gate kind");
}

CMatrix gate_local_generator(const GateOp& op) {
  switch (op.kind) {
    case GateKind::I:
    case GateKind::WAIT: {
      const auto d = gate_local_matrix(op).rows();
      return CMatrix::Zero(d, d);
    }
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
    case GateKind::CNOT:
    case GateKind::CZ:
    case GateKind::SWAP:
      return involution_generator(gate_local_matrix(op));
    case GateKind::S: return mat2(0.0, 0.0, 0.0, -kPi / 2.0);
    case GateKind::RX: return (*op.theta / 2.0) * mat2(0.0, 1.0, 1.0, 0.0);
    case GateKind::RY: return (*op.theta / 2.0) * mat2(0.0, -kI, kI, 0.0);
    case GateKind::RZ: return (*op.theta / 2.0) * mat2(1.0, 0.0, 0.0, -1.0);
    case GateKind::SQRTSWAP: {
      // Exchange coupling: the antisymmetric projector picks up phase +i.
      return (-kPi / 4.0) * (CMatrix::Identity(4, 4) - swap_matrix());
    }
  }
  throw std::logic_error("unhandled gate kind");
}

Operator gate_unitary(const GateOp& op, int n_qubits) {
  validate_gate(op, n_qubits);
  if (op.kind == GateKind::WAIT || op.kind == GateKind::I) return Operator::identity(n_qubits);
  return embed_local(gate_local_matrix(op), op.qubits, n_qubits);
}

Operator gate_generator(const GateOp& op, int n_qubits) {
  validate_gate(op, n_qubits);
  if (op.kind == GateKind::WAIT || op.kind == GateKind::I) return Operator::zero(n_qubits);
  return embed_local(gate_local_generator(op), op.qubits, n_qubits);
}

StateVector apply_circuit(const Circuit& circuit, const StateVector& initial) {
  if (initial.n_qubits() != circuit.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  StateVector psi = initial;
  for (const auto& op : circuit.ops()) psi = gate_unitary(op, circuit.n_qubits()).apply(psi);
  return psi;
}

}  // namespace corrnoise
