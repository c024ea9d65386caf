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

#include <gtest/gtest.h>

#include <filesystem>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

#include "corrnoise/canonical.hpp"
#include "corrnoise/circuit.hpp"
#include "corrnoise/dsl.hpp"
#include "corrnoise/scoring.hpp"
#include "oracles.hpp"

using namespace corrnoise;
using std::numbers::pi;

namespace {

const std::vector<GateKind> kAllGates{GateKind::I,  GateKind::X,    GateKind::Y,    GateKind::Z,   GateKind::H,
                                      GateKind::S,  GateKind::RX,   GateKind::RY,   GateKind::RZ,  GateKind::CNOT,
                                      GateKind::CZ, GateKind::SWAP, GateKind::SQRTSWAP, GateKind::WAIT};

GateOp random_gate(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<std::size_t> pick(0, kAllGates.size() - 1);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  GateOp op;
  op.kind = kAllGates[pick(rng)];
  std::vector<int> qs;
  for (int q = 1; q <= n; ++q) qs.push_back(q);
  std::shuffle(qs.begin(), qs.end(), rng);
  const int arity = gate_arity(op.kind).value_or(static_cast<int>(rng() % 2));
  op.qubits.assign(qs.begin(), qs.begin() + arity);
  if (gate_takes_angle(op.kind)) op.theta = u(rng);
  op.duration = std::abs(u(rng));
  return op;
}

CVector basis(int n, int k) { return StateVector::basis(n, static_cast<std::uint64_t>(k)).amplitudes(); }

}  // namespace

TEST(Gates, AllUnitaryAndGeneratorsExact) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const GateOp op = random_gate(rng, 3);
    const Operator u = gate_unitary(op, 3);
    EXPECT_TRUE(u.is_unitary(1e-12)) << gate_name(op.kind);
    const Operator a = gate_generator(op, 3);
    EXPECT_TRUE(a.is_hermitian(1e-12));
    const CMatrix expa = (Complex(0, -1) * a.matrix()).exp();
    EXPECT_LT((expa - u.matrix()).norm(), 1e-10) << gate_name(op.kind);
  }
}

TEST(Gates, SpecExamples) {
  const GateOp cnot{GateKind::CNOT, {1, 2}};
  EXPECT_LT((gate_unitary(cnot, 2).matrix() * basis(2, 2) - basis(2, 3)).norm(), 1e-15);
  const GateOp sq{GateKind::SQRTSWAP, {1, 2}};
  CVector expected = CVector::Zero(4);
  expected[1] = Complex(0.5, 0.5);
  expected[2] = Complex(0.5, -0.5);
  EXPECT_LT((gate_unitary(sq, 2).matrix() * basis(2, 1) - expected).norm(), 1e-15);
  const GateOp cz{GateKind::CZ, {1, 2}};
  EXPECT_LT((gate_unitary(cz, 2).matrix() * basis(2, 3) + basis(2, 3)).norm(), 1e-15);
  const GateOp wait{GateKind::WAIT, {}, std::nullopt, 3.0};
  EXPECT_TRUE(gate_unitary(wait, 2).matrix().isIdentity());
  // CNOT with control 2 flips qubit 1.
  const GateOp rev{GateKind::CNOT, {2, 1}};
  EXPECT_LT((gate_unitary(rev, 2).matrix() * basis(2, 1) - basis(2, 3)).norm(), 1e-15);
}

TEST(Gates, ValidationErrors) {
  EXPECT_THROW(validate_gate({GateKind::CNOT, {1, 1}}, 2), std::invalid_argument);
  EXPECT_THROW(validate_gate({GateKind::X, {3}}, 2), std::invalid_argument);
  EXPECT_THROW(validate_gate({GateKind::RX, {1}}, 2), std::invalid_argument);
  EXPECT_THROW(validate_gate({GateKind::X, {1}, std::nullopt, -1.0}, 2), std::invalid_argument);
  EXPECT_THROW(validate_gate({GateKind::X, {1, 2}}, 2), std::invalid_argument);
  EXPECT_EQ(gate_from_name("sqrtswap"), GateKind::SQRTSWAP);
  EXPECT_FALSE(gate_from_name("BADGATE"));
}

TEST(Dsl, ParsesSpecExample) {
  const Circuit c = parse_circuit("qubits 2\nX 2 @ 1.0\nSQRTSWAP 1 2 @ 2.0");
  ASSERT_EQ(c.size(), 2U);
  EXPECT_EQ(c.ops()[1].kind, GateKind::SQRTSWAP);
  EXPECT_DOUBLE_EQ(c.total_duration(), 3.0);
}

TEST(Dsl, AnglesCommentsAndDefaults) {
  const Circuit c = parse_circuit("# leading comment\n\nqubits 3  # header\nlabel my test\nRZ 3 theta=-3*pi/4\n"
                                  "RX 1 theta=0.25 @ 0\nWAIT @ 2.5\n");
  EXPECT_EQ(c.label(), "my test");
  ASSERT_EQ(c.size(), 3U);
  EXPECT_DOUBLE_EQ(*c.ops()[0].theta, -3 * pi / 4);
  EXPECT_DOUBLE_EQ(c.ops()[0].duration, 1.0);
  EXPECT_DOUBLE_EQ(c.ops()[1].duration, 0.0);
  EXPECT_TRUE(c.ops()[2].qubits.empty());
}

struct BadInput {
  const char* text;
  ParseError::Kind kind;
  int line;
};

class DslErrors : public ::testing::TestWithParam<BadInput> {};

TEST_P(DslErrors, ReportsKindAndLine) {
  const auto& p = GetParam();
  try {
    parse_circuit(p.text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), p.kind) << e.what();
    EXPECT_EQ(e.line(), p.line) << e.what();
    EXPECT_GE(e.column(), 1);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, DslErrors,
    ::testing::Values(BadInput{"qubits 2\nBADGATE 1 @ 1", ParseError::Kind::kUnknownGate, 2},
                      BadInput{"qubits 2\nCNOT 1 1 @ 1", ParseError::Kind::kDuplicateOperand, 2},
                      BadInput{"qubits 2\nX 3", ParseError::Kind::kOperandOutOfRange, 2},
                      BadInput{"qubits 2\n\nX 1 @ -1", ParseError::Kind::kNegativeDuration, 3},
                      BadInput{"X 1", ParseError::Kind::kMissingHeader, 1},
                      BadInput{"# nothing\n", ParseError::Kind::kMissingHeader, 1},
                      BadInput{"qubits 2\nCNOT 1", ParseError::Kind::kArity, 2},
                      BadInput{"qubits 2\nRY 1 theta=pi/x", ParseError::Kind::kSyntax, 2},
                      BadInput{"qubits 2\nX 1 @", ParseError::Kind::kSyntax, 2},
                      BadInput{"qubits 2\nX 1 junk", ParseError::Kind::kSyntax, 2},
                      BadInput{"qubits 2\nRY 1", ParseError::Kind::kSyntax, 2},
                      BadInput{"qubits 2\nqubits 3", ParseError::Kind::kSyntax, 2}));

TEST(Dsl, ErrorMessageNamesPosition) {
  try {
    parse_circuit("qubits 2\n  BADGATE 1");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 3);
    EXPECT_NE(std::string(e.what()).find("line 2, column 3"), std::string::npos);
  }
}

TEST(Dsl, FormatParseRoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Circuit c(3, {}, "round trip " + std::to_string(trial));
    for (int k = 0; k < 12; ++k) c.append(random_gate(rng, 3));
    EXPECT_EQ(parse_circuit(format_circuit(c)), c);
    EXPECT_EQ(circuit_from_json(to_json(c)), c);
  }
  for (const auto& [label, c] : canonical_circuits()) {
    EXPECT_EQ(parse_circuit(format_circuit(c)), c) << label;
  }
}

TEST(Dsl, MissingFileIsIoError) {
  EXPECT_THROW(load_circuit_file("/nonexistent/none.circ"), IoError);
}

TEST(Canonical, GoldenFilesMatch) {
  for (const auto& [label, c] : canonical_circuits()) {
    const Circuit file = load_circuit_file(std::filesystem::path(CORRNOISE_DATA_DIR) / "circuits" / (label + ".circ"));
    EXPECT_EQ(file, c) << label;
  }
}

TEST(Canonical, NoiseFreeTargets) {
  const StateVector bell = StateVector::normalized(2, basis(2, 1) + basis(2, 2));
  for (const auto& [label, c] : canonical_circuits()) {
    const StateVector out = apply_circuit(c, StateVector::basis(2, 0));
    EXPECT_GT(fidelity(out, canonical_target(label)), 1 - 1e-10) << label;
    if (label.starts_with("bell")) EXPECT_GT(fidelity(out, bell), 1 - 1e-10) << label;
  }
}

TEST(Canonical, DeutschJozsaDecidesBalanced) {
  // U_f = CNOT is balanced: the first qubit must read 1 with certainty.
  for (const char* label : {"dj_y", "dj_h"}) {
    const StateVector out = apply_circuit(canonical_circuit(label), StateVector::basis(2, 0));
    EXPECT_NEAR(out.probability(2) + out.probability(3), 1.0, 1e-12) << label;
  }
}

TEST(Canonical, ScoresAscendInLabelOrder) {
  double prev = -1.0;
  for (auto label : canonical_labels()) {
    const double d = score_circuit(canonical_circuit(label), DfsSpec::minus()).d_A;
    EXPECT_GT(d, prev) << label;
    prev = d;
  }
  EXPECT_THROW(canonical_circuit("nope"), std::out_of_range);
}

TEST(Ramsey, PreparationStates) {
  const double h = 1 / std::sqrt(2.0);
  const StateVector plus = apply_circuit(ramsey_preparation(RamseyVariant::kPlus), StateVector::basis(2, 0));
  EXPECT_NEAR(std::abs(plus[0] - h) + std::abs(plus[3] - h), 0.0, 1e-12);
  const StateVector minus = apply_circuit(ramsey_preparation(RamseyVariant::kMinus), StateVector::basis(2, 0));
  EXPECT_NEAR(std::abs(minus[1] - h) + std::abs(minus[2] - h), 0.0, 1e-12);
  for (auto v : {RamseyVariant::kPlus, RamseyVariant::kMinus, RamseyVariant::kQubit1, RamseyVariant::kQubit2}) {
    const Circuit c = ramsey_circuit(v, 0.0);
    EXPECT_NEAR(apply_circuit(c, StateVector::basis(2, 0)).probability(ramsey_target()), 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(ramsey_circuit(v, 2.5).total_duration(), 2.5);
    EXPECT_EQ(ramsey_variant_from_string(to_string(v)), v);
  }
  EXPECT_THROW(ramsey_circuit(RamseyVariant::kPlus, -1.0), std::invalid_argument);
}
