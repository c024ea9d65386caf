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
 * Benchmark circuits: Bell-state preparation and two-qubit Deutsch-Jozsa with
 * U_f = CNOT, plus the Ramsey correlation-measurement circuits.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "corrnoise/circuit.hpp"

namespace corrnoise {

/// Labels in ascending d_A order: bell_sqrtswap, bell_cz, dj_y, dj_h.
std::map<std::string, Circuit> canonical_circuits();
const std::array<std::string_view, 4>& canonical_labels();
/// Throws std::out_of_range for an unknown label.
Circuit canonical_circuit(std::string_view label);

/// Noise-free target state of a canonical circuit started from |00>.
StateVector canonical_target(std::string_view label);

/**
 * plus:   {|00>,|11>} subspace, phase 2(b1+b2)t
 * minus:  {|01>,|10>} subspace, phase 2(b1-b2)t
 * qubit1/qubit2: single-qubit Ramsey on that qubit, phase 2 b_j t
 */
enum class RamseyVariant { kPlus, kMinus, kQubit1, kQubit2 };

std::string_view to_string(RamseyVariant v);
RamseyVariant ramsey_variant_from_string(std::string_view s);

/// Weights v such that the accumulated phase is 2 (v . b) t; the envelope rate is v^T Sigma v.
std::array<double, 2> ramsey_weights(RamseyVariant v);

/// Zero-duration preparation gates taking |00> to the superposition.
Circuit ramsey_preparation(RamseyVariant v);

/**
 * Preparation, WAIT(wait_duration), then the inverted preparation. The
 * measured quantity is the probability of returning to ramsey_target().
 */
Circuit ramsey_circuit(RamseyVariant v, double wait_duration);
inline constexpr std::uint64_t ramsey_target() { return 0; }

}  // namespace corrnoise
