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
 * Zero-mean multivariate Gaussian quasi-static dephasing noise.
 *
 * One offset vector (delta b_1, ..., delta b_n) is drawn per circuit run and
 * held constant for the whole run. Realization i is a pure function of
 * (seed, i), so workers can draw disjoint index ranges independently.
 */
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace corrnoise {

struct NoiseRealization {
  std::vector<double> offsets;  ///< delta b_i, rad/time
  std::uint64_t seed = 0;
  std::uint64_t index = 0;
};

class NoiseModel {
 public:
  /**
   * Builds Sigma_ij = c_ij sigma_i sigma_j.
   *
   * Rejects negative sigmas, |c_ij| > 1, a non-symmetric correlation matrix,
   * c_ii != 1, and any Sigma with an eigenvalue below -1e-10 * max|Sigma|.
   * Rank-deficient Sigma (|c| = 1) is accepted.
   */
  NoiseModel(std::vector<double> sigmas, Eigen::MatrixXd correlations);

  static NoiseModel zero(int n_qubits);
  static NoiseModel two_qubit(double sigma1, double sigma2, double c);
  /// sigma_1 = r * base_sigma, sigma_2 = base_sigma.
  static NoiseModel from_asymmetry(double base_sigma, double r, double c);

  int n_qubits() const { return static_cast<int>(sigmas_.size()); }
  const std::vector<double>& sigmas() const { return sigmas_; }
  const Eigen::MatrixXd& correlations() const { return correlations_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }
  /// r = sigma_1 / sigma_2 for two-qubit models.
  double asymmetry() const;
  bool is_zero() const { return covariance_.cwiseAbs().maxCoeff() == 0.0; }

  /// v^T Sigma v
  double quadratic_form(std::span<const double> v) const;

  /// Realization `index` of the stream identified by `seed`.
  NoiseRealization realization(std::uint64_t seed, std::uint64_t index) const;
  /// Writes offsets of realization `index` into `out` (size n_qubits).
  void draw(std::uint64_t seed, std::uint64_t index, std::span<double> out) const;

  /// Sampling factor F with F F^T = Sigma.
  const Eigen::MatrixXd& factor() const { return factor_; }

 private:
  std::vector<double> sigmas_;
  Eigen::MatrixXd correlations_;
  Eigen::MatrixXd covariance_;
  Eigen::MatrixXd factor_;
};

NoiseModel build_covariance(std::vector<double> sigmas, Eigen::MatrixXd correlations);

/// Realizations 0..count-1 of `seed`; count must be >= 1.
std::vector<NoiseRealization> sample(const NoiseModel& model, std::uint64_t seed, std::size_t count);

/// Var(sum_i signs_i delta b_i) = signs^T Sigma signs; each sign must be +1 or -1.
double variance_of_sum(const NoiseModel& model, std::span<const int> signs);

/// {"sigmas": [...], "correlations": [[...]]}
nlohmann::json to_json(const NoiseModel& model);
/**
 * Accepts the canonical form above, or the two-qubit shorthand
 * {"base_sigma": s, "r": r, "c": c}.
 */
NoiseModel noise_model_from_json(const nlohmann::json& j);

}  // namespace corrnoise
