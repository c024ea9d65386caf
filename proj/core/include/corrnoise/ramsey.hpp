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
 * Simulated Ramsey correlation measurements.
 *
 * Under quasi-static Gaussian noise the return probability of each variant is
 *   P(t) = 1/2 + 1/2 exp(-2 v^T Sigma v t^2) cos(2 (v . b) t)
 * with v = (1, 1), (1, -1), (1, 0) or (0, 1). The plus and minus rates obey
 * rate_plus + rate_minus = 2 (rate_1 + rate_2), and their difference gives
 * the cross term 4 <db1 db2>.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corrnoise/canonical.hpp"
#include "corrnoise/noise.hpp"
#include "corrnoise/simulate.hpp"

namespace corrnoise {

struct EnvelopeFit {
  /// sigma^2 in the envelope exp(-2 sigma^2 t^2).
  double sigma2 = 0.0;
  double sigma2_stderr = 0.0;
  /// Angular frequency of the fringes, >= 0.
  double omega = 0.0;
  /// Root-mean-square residual of the fit.
  double residual = 0.0;
  /// Set when the envelope is flat over the sampled window; sigma2 is then 0.
  bool infinite_t2 = false;
};

/// Least-squares fit of 1/2 + 1/2 exp(-2 sigma^2 t^2) cos(omega t). Needs >= 8 points.
EnvelopeFit fit_envelope(const std::vector<double>& times, const std::vector<double>& probabilities);

/// 1/e time of the envelope, 1 / sqrt(2 sigma^2); infinity when sigma2 == 0.
double t2_effective(double sigma2);

/// Noise-free closed form P(t) for the given variant.
double ramsey_prediction(RamseyVariant variant, double t, const std::vector<double>& static_fields,
                         const NoiseModel& noise);

struct RamseyOptions {
  /// Binomial measurement shots per point; 0 means exact probabilities.
  std::size_t shots = 0;
};

struct RamseyResult {
  RamseyVariant variant = RamseyVariant::kPlus;
  std::vector<double> wait_times;
  std::vector<double> probabilities;
  std::vector<std::size_t> realizations;
  std::vector<bool> converged;
  EnvelopeFit fit;
  double t2_effective = 0.0;
  double n_oscillations = 0.0;

  double fitted_envelope_rate() const { return fit.sigma2; }
  double oscillation_freq() const { return fit.omega; }
  bool all_converged() const;
};

/// Two-qubit only. wait_grid must be strictly increasing with >= 8 non-negative points.
RamseyResult run_ramsey(RamseyVariant variant, const std::vector<double>& wait_grid,
                        const std::vector<double>& static_fields, const NoiseModel& noise,
                        const EnsembleConfig& cfg, const RamseyOptions& opts = {});

struct CorrelationEstimate {
  double s12_hat = 0.0;
  /// s12_hat / sqrt(rate_1 rate_2); NaN if either single-qubit rate is 0.
  double c_hat = 0.0;
  double rate_plus = 0.0;
  double rate_minus = 0.0;
  double rate_1 = 0.0;
  double rate_2 = 0.0;
  /// rate_plus + rate_minus - 2 (rate_1 + rate_2)
  double sum_rule_residual = 0.0;
  bool sum_rule_warning = false;
};

/**
 * Inverts the sum rule. `rate_uncertainty` is the combined standard error of
 * the sum-rule residual; the warning fires beyond three of them.
 */
CorrelationEstimate extract_s12(double rate_plus, double rate_minus, double rate_1, double rate_2,
                                double rate_uncertainty = 0.0);

/// Combined standard error of the sum-rule residual from four fits.
double sum_rule_uncertainty(const EnvelopeFit& plus, const EnvelopeFit& minus, const EnvelopeFit& q1,
                            const EnvelopeFit& q2);

/// "+", "-" or "none". T2 values may be infinite.
std::string classify_dfs(double t2_plus, double t2_minus, double ratio_threshold = 2.0);

}  // namespace corrnoise
