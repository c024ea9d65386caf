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

#include "corrnoise/canonical.hpp"

#include <numbers>
#include <stdexcept>
#include <string>

namespace corrnoise {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

GateOp g1(GateKind k, int q, double duration = 1.0) { return {k, {q}, std::nullopt, duration}; }
GateOp g2(GateKind k, int a, int b, double duration = 1.0) { return {k, {a, b}, std::nullopt, duration}; }
GateOp rot(GateKind k, int q, double theta, double duration = 1.0) { return {k, {q}, theta, duration}; }

// Valid for preparations built from self-inverse gates and rotations.
Circuit inverse_of(const Circuit& c) {
  Circuit inv(c.n_qubits());
  for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) {
    GateOp op = *it;
    if (op.theta) op.theta = -*op.theta;
    inv.append(std::move(op));
  }
  return inv;
}

}  // namespace

const std::array<std::string_view, 4>& canonical_labels() {
  static const std::array<std::string_view, 4> labels{"bell_sqrtswap", "bell_cz", "dj_y", "dj_h"};
  return labels;
}

std::map<std::string, Circuit> canonical_circuits() {
  std::map<std::string, Circuit> out;
  for (auto label : canonical_labels()) out.emplace(std::string(label), canonical_circuit(label));
  return out;
}

Circuit canonical_circuit(std::string_view label) {
  using enum GateKind;
  if (label == "bell_sqrtswap") {
    return Circuit(2,
                   {g1(X, 2), g2(SQRTSWAP, 1, 2), rot(RZ, 1, std::numbers::pi / 4.0),
                    rot(RZ, 2, -std::numbers::pi / 4.0)},
                   "bell_sqrtswap");
  }
  if (label == "bell_cz") {
    return Circuit(2, {rot(RY, 1, kHalfPi), rot(RY, 2, kHalfPi), g2(CZ, 1, 2), rot(RY, 2, kHalfPi)},
                   "bell_cz");
  }
  if (label == "dj_y") {
    return Circuit(2,
                   {rot(RY, 1, kHalfPi), rot(RY, 2, -kHalfPi), g2(CNOT, 1, 2), rot(RY, 2, -kHalfPi),
                    rot(RY, 1, -kHalfPi)},
                   "dj_y");
  }
  if (label == "dj_h") {
    return Circuit(2, {g1(H, 1), g1(X, 2), g1(H, 2), g2(CNOT, 1, 2), g1(H, 2), g1(H, 1)}, "dj_h");
  }
  throw std::out_of_range("unknown canonical circuit '" + std::string(label) + "'");
}

StateVector canonical_target(std::string_view label) {
  if (label == "bell_sqrtswap" || label == "bell_cz") {
    CVector amps = CVector::Zero(4);
    amps[1] = amps[2] = 1.0 / std::numbers::sqrt2;
    return StateVector(2, amps);
  }
  if (label == "dj_y" || label == "dj_h") return StateVector::from_bits("11");
  throw std::out_of_range("unknown canonical circuit '" + std::string(label) + "'");
}

std::string_view to_string(RamseyVariant v) {
  switch (v) {
    case RamseyVariant::kPlus: return "plus";
    case RamseyVariant::kMinus: return "minus";
    case RamseyVariant::kQubit1: return "qubit1";
    case RamseyVariant::kQubit2: return "qubit2";
  }
  return "?";
}

RamseyVariant ramsey_variant_from_string(std::string_view s) {
  if (s == "plus" || s == "+") return RamseyVariant::kPlus;
  if (s == "minus" || s == "-") return RamseyVariant::kMinus;
  if (s == "qubit1") return RamseyVariant::kQubit1;
  if (s == "qubit2") return RamseyVariant::kQubit2;
  throw std::invalid_argument("unknown Ramsey variant '" + std::string(s) + "'");
}

std::array<double, 2> ramsey_weights(RamseyVariant v) {
  switch (v) {
    case RamseyVariant::kPlus: return {1.0, 1.0};
    case RamseyVariant::kMinus: return {1.0, -1.0};
    case RamseyVariant::kQubit1: return {1.0, 0.0};
    case RamseyVariant::kQubit2: return {0.0, 1.0};
  }
  throw std::logic_error("unhandled Ramsey variant");
}

Circuit ramsey_preparation(RamseyVariant v) {
  using enum GateKind;
  Circuit c(2, {}, "ramsey_" + std::string(to_string(v)) + "_prep");
  switch (v) {
    case RamseyVariant::kMinus:
      c.append(g1(X, 2, 0.0));
      [[fallthrough]];
    case RamseyVariant::kPlus:
      c.append(rot(RY, 1, kHalfPi, 0.0));
      c.append(g2(CNOT, 1, 2, 0.0));
      break;
    case RamseyVariant::kQubit1: c.append(rot(RY, 1, kHalfPi, 0.0)); break;
    case RamseyVariant::kQubit2: c.append(rot(RY, 2, kHalfPi, 0.0)); break;
  }
  return c;
}

Circuit ramsey_circuit(RamseyVariant v, double wait_duration) {
  if (!(wait_duration >= 0.0)) throw std::invalid_argument("wait duration must be >= 0");
  const Circuit prep = ramsey_preparation(v);
  Circuit c = prep;
  c.set_label("ramsey_" + std::string(to_string(v)));
  c.append({GateKind::WAIT, {}, std::nullopt, wait_duration});
  const Circuit undo = inverse_of(prep);
  for (const auto& op : undo.ops()) c.append(op);
  return c;
}

}  // namespace corrnoise
