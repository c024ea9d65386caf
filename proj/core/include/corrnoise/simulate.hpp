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
 * Monte-Carlo ensemble simulation of circuits under quasi-static noise.
 *
 * Each realization draws one offset vector delta b and evolves the circuit
 * with H0 + Hn active during every gate interval. The ensemble density matrix
 * rho(t) = [|psi(t)><psi(t)|]_av is compared with the noise-free trajectory.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corrnoise/circuit.hpp"
#include "corrnoise/measures.hpp"
#include "corrnoise/noise.hpp"

namespace corrnoise {

/**
 * How a gate occupies its interval.
 *
 * kContinuous: the gate is driven by the constant Hamiltonian A / d (A from
 * gate_local_generator) together with H0 + Hn for the whole duration d.
 * kInstantaneous: free evolution under H0 + Hn for d, then the ideal gate
 * unitary at the end of the interval.
 * Zero-duration gates are applied as instantaneous unitaries in both models.
 */
enum class GateModel { kContinuous, kInstantaneous };

std::string_view to_string(GateModel m);
GateModel gate_model_from_string(std::string_view s);

struct EnsembleConfig {
  std::size_t n_realizations_initial = 1000;
  double convergence_tol = 0.02;
  std::size_t max_realizations = 64000;
  int time_samples_per_gate = 8;
  std::uint64_t rng_seed = 1;
  GateModel gate_model = GateModel::kContinuous;
  /// Worker threads; results do not depend on this value.
  unsigned threads = 1;
  /// Keep the ensemble density matrix at every time sample in the report.
  bool keep_density_matrices = true;

  void validate() const;
};

/// Explicit count if nonzero, else $CORRNOISE_THREADS, else hardware concurrency.
unsigned resolve_thread_count(unsigned requested);

struct TrajectoryReport {
  std::vector<double> times;
  /// Gate interval boundaries (the start of each interval plus the end time).
  std::vector<double> interval_edges;
  std::vector<StateVector> ideal_states;
  std::vector<DensityMatrix> avg_rho;
  std::vector<double> fidelity;
  std::vector<double> infidelity;
  std::vector<double> purity;
  std::vector<double> d_g;  ///< empty when no DFS was supplied
  std::vector<double> d_c;
  double integrated_d_g = 0.0;
  double integrated_d_c = 0.0;
  /// Standard error of the final infidelity over realizations.
  double final_infidelity_stderr = 0.0;
  std::size_t n_realizations_used = 0;
  bool converged = false;
  GateModel gate_model = GateModel::kContinuous;
  std::uint64_t rng_seed = 0;

  double final_infidelity() const { return infidelity.back(); }
  double final_purity() const { return purity.back(); }
};

/// Noise-free trajectory sampled time_samples_per_gate times per gate interval.
std::vector<TimedState> run_ideal(const Circuit& circuit, const StateVector& initial,
                                  const std::vector<double>& static_fields,
                                  const EnsembleConfig& cfg = {});

TrajectoryReport run_ensemble(const Circuit& circuit, const StateVector& initial,
                              const std::vector<double>& static_fields, const NoiseModel& noise,
                              const EnsembleConfig& cfg, const std::optional<DfsSpec>& dfs = std::nullopt);

struct SweepCell {
  double r = 0.0;
  double c = 0.0;
  double final_infidelity = 0.0;
  double integrated_d_c = 0.0;
  std::size_t n_realizations = 0;
  bool converged = false;
  std::string error;  ///< non-empty if this cell could not be simulated
};

struct SweepGrid {
  std::vector<double> r_values;
  std::vector<double> c_values;
  std::vector<SweepCell> cells;  ///< r-major
  bool all_converged() const;
};

/// Two-qubit r-c sweep with sigma_1 = r * base_sigma, sigma_2 = base_sigma.
SweepGrid sweep_rc(const Circuit& circuit, const StateVector& initial,
                   const std::vector<double>& static_fields, const std::vector<double>& r_values,
                   const std::vector<double>& c_values, double base_sigma, const EnsembleConfig& cfg);

}  // namespace corrnoise
