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
 * Hilbert-space-local decoherence measures relative to a declared
 * decoherence-free subspace (DFS):
 *
 *  - d_g, the squared distance |(I - P) psi|^2 from psi to the DFS;
 *  - d_c, the short-time purity-loss coefficient
 *    Tr[rho0^2 Hn^2 - rho0 Hn rho0 Hn]_av, i.e. the noise-averaged variance
 *    of Hn in psi. d_c has no natural normalization and is never rescaled here.
 */
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "corrnoise/linalg.hpp"
#include "corrnoise/noise.hpp"

namespace corrnoise {

class DfsSpec {
 public:
  /// Basis indices must be distinct, in range, and span 1 <= D < 2^n states.
  DfsSpec(int n_qubits, std::vector<std::uint64_t> basis_states, std::string sign_label = {});

  /// span{|00>, |11>}
  static DfsSpec plus();
  /// span{|01>, |10>}
  static DfsSpec minus();
  /// "+" or "-" (also accepts "plus"/"minus").
  static DfsSpec from_sign(std::string_view sign);

  int n_qubits() const { return n_qubits_; }
  const std::vector<std::uint64_t>& basis_states() const { return basis_; }
  const std::string& sign_label() const { return label_; }
  std::size_t dimension() const { return basis_.size(); }
  bool contains(std::uint64_t index) const;

  /// The orthogonal basis set.
  DfsSpec complement() const;

  bool operator==(const DfsSpec&) const = default;

 private:
  int n_qubits_;
  std::vector<std::uint64_t> basis_;   // in declaration order
  std::vector<std::uint64_t> sorted_;  // for lookup
  std::string label_;
};

/// {"n_qubits": 2, "basis_states": ["01", "10"], "label": "-"} or {"sign": "-"}.
DfsSpec dfs_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DfsSpec& dfs);

double d_g(const StateVector& state, const DfsSpec& dfs);

/// Closed form sum_ij Sigma_ij Cov_psi(Z_i, Z_j); units (rad/time)^2.
double d_c(const StateVector& state, const NoiseModel& noise);

/// Trace formula evaluated on a density matrix (mixed states allowed).
double d_c(const DensityMatrix& rho, const NoiseModel& noise);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
};

/// Averages Tr[rho0^2 Hn^2 - rho0 Hn rho0 Hn] over sampled Hn; n_samples >= 100.
McEstimate d_c_mc(const StateVector& state, const NoiseModel& noise, std::size_t n_samples,
                  std::uint64_t seed);

struct MeasureTrace {
  std::vector<double> times;
  std::vector<double> d_g;
  std::vector<double> d_c;
  double integrated_d_g = 0.0;
  double integrated_d_c = 0.0;
};

using TimedState = std::pair<double, StateVector>;

MeasureTrace measure_along_trajectory(const std::vector<TimedState>& trajectory, const DfsSpec& dfs,
                                      const NoiseModel& noise);

/// Trapezoid rule over a non-decreasing grid (repeated times contribute nothing).
double trapezoid(const std::vector<double>& times, const std::vector<double>& values);

}  // namespace corrnoise
