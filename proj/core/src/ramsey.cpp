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

#include "corrnoise/ramsey.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/NonLinearOptimization>

namespace corrnoise {
namespace {

constexpr double kFlatEnvelope = 1e-6;

double model(double s, double omega, double t) {
  return 0.5 + 0.5 * std::exp(-2.0 * s * t * t) * std::cos(omega * t);
}

double sum_sq(const std::vector<double>& t, const std::vector<double>& p, double s, double omega) {
  double acc = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double r = model(s, omega, t[i]) - p[i];
    acc += r * r;
  }
  return acc;
}

// Parameters (u, omega) with sigma^2 = u^2 keep the rate non-negative.
struct EnvelopeFunctor {
  using Scalar = double;
  enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
  using InputType = Eigen::VectorXd;
  using ValueType = Eigen::VectorXd;
  using JacobianType = Eigen::MatrixXd;

  const std::vector<double>& t;
  const std::vector<double>& p;

  int inputs() const { return 2; }
  int values() const { return static_cast<int>(t.size()); }

  int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const {
    for (std::size_t i = 0; i < t.size(); ++i) {
      f[static_cast<Eigen::Index>(i)] = model(x[0] * x[0], x[1], t[i]) - p[i];
    }
    return 0;
  }

  int df(const Eigen::VectorXd& x, Eigen::MatrixXd& j) const {
    for (std::size_t i = 0; i < t.size(); ++i) {
      const double ti = t[i];
      const double env = std::exp(-2.0 * x[0] * x[0] * ti * ti);
      const auto row = static_cast<Eigen::Index>(i);
      j(row, 0) = -2.0 * x[0] * ti * ti * env * std::cos(x[1] * ti);
      j(row, 1) = -0.5 * ti * env * std::sin(x[1] * ti);
    }
    return 0;
  }
};

std::uint64_t point_seed(std::uint64_t seed, std::size_t point) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(point), 0x52a7U};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace

EnvelopeFit fit_envelope(const std::vector<double>& times, const std::vector<double>& probabilities) {
  if (times.size() != probabilities.size()) throw std::invalid_argument("times and probabilities differ in length");
  if (times.size() < 8) throw std::invalid_argument("envelope fit needs at least 8 points");
  double t_max = 0.0;
  double dt_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || !std::isfinite(probabilities[i])) {
      throw std::invalid_argument("non-finite Ramsey data");
    }
    if (i > 0) {
      if (times[i] <= times[i - 1]) throw std::invalid_argument("wait times must be strictly increasing");
      dt_min = std::min(dt_min, times[i] - times[i - 1]);
    }
    t_max = std::max(t_max, std::abs(times[i]));
  }
  if (t_max == 0.0) throw std::invalid_argument("wait times must not all be zero");

  // Coarse grid up to the Nyquist frequency of the sampling.
  const double omega_max = std::numbers::pi / dt_min;
  constexpr int kOmegaSteps = 512;
  std::vector<double> rates{0.0};
  for (int k = 0; k <= 60; ++k) rates.push_back(std::pow(10.0, -4.0 + k * 0.1) / (2.0 * t_max * t_max));
  double best_s = 0.0;
  double best_w = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= kOmegaSteps; ++k) {
    const double w = omega_max * k / kOmegaSteps;
    for (double s : rates) {
      const double v = sum_sq(times, probabilities, s, w);
      if (v < best) {
        best = v;
        best_s = s;
        best_w = w;
      }
    }
  }

  EnvelopeFunctor functor{times, probabilities};
  Eigen::LevenbergMarquardt<EnvelopeFunctor> lm(functor);
  lm.parameters.xtol = 1e-14;
  lm.parameters.ftol = 1e-14;
  lm.parameters.maxfev = 2000;
  Eigen::VectorXd x(2);
  x << std::sqrt(best_s), best_w;
  lm.minimize(x);
  double s = x[0] * x[0];
  double w = std::abs(x[1]);
  if (!std::isfinite(s) || !std::isfinite(w) || sum_sq(times, probabilities, s, w) > best) {
    s = best_s;
    w = best_w;
  }

  EnvelopeFit fit;
  fit.omega = w;
  const double rss = sum_sq(times, probabilities, s, w);
  const auto n = static_cast<double>(times.size());
  fit.residual = std::sqrt(rss / n);
  if (2.0 * s * t_max * t_max < kFlatEnvelope) {
    fit.infinite_t2 = true;
    fit.sigma2 = 0.0;
    return fit;
  }
  fit.sigma2 = s;

  Eigen::MatrixXd j(static_cast<Eigen::Index>(times.size()), 2);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double ti = times[i];
    const double env = std::exp(-2.0 * s * ti * ti);
    const auto row = static_cast<Eigen::Index>(i);
    j(row, 0) = -ti * ti * env * std::cos(w * ti);
    j(row, 1) = -0.5 * ti * env * std::sin(w * ti);
  }
  const Eigen::MatrixXd cov = (j.transpose() * j).completeOrthogonalDecomposition().pseudoInverse() *
                              (rss / std::max(n - 2.0, 1.0));
  fit.sigma2_stderr = std::sqrt(std::max(cov(0, 0), 0.0));
  return fit;
}

double t2_effective(double sigma2) {
  if (sigma2 < 0.0) throw std::invalid_argument("negative envelope rate");
  if (sigma2 == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(2.0 * sigma2);
}

double ramsey_prediction(RamseyVariant variant, double t, const std::vector<double>& static_fields,
                         const NoiseModel& noise) {
  if (noise.n_qubits() != 2 || static_fields.size() != 2) {
    throw std::invalid_argument("Ramsey experiments are two-qubit");
  }
  const auto v = ramsey_weights(variant);
  const double rate = noise.quadratic_form(v);
  const double omega = 2.0 * (v[0] * static_fields[0] + v[1] * static_fields[1]);
  return model(rate, omega, t);
}

bool RamseyResult::all_converged() const {
  return std::all_of(converged.begin(), converged.end(), [](bool b) { return b; });
}

RamseyResult run_ramsey(RamseyVariant variant, const std::vector<double>& wait_grid,
                        const std::vector<double>& static_fields, const NoiseModel& noise,
                        const EnsembleConfig& cfg, const RamseyOptions& opts) {
  if (noise.n_qubits() != 2) throw std::invalid_argument("Ramsey experiments are two-qubit");
  if (wait_grid.size() < 8) throw std::invalid_argument("wait grid needs at least 8 points");
  for (std::size_t i = 0; i < wait_grid.size(); ++i) {
    if (wait_grid[i] < 0.0 || (i > 0 && wait_grid[i] <= wait_grid[i - 1])) {
      throw std::invalid_argument("wait grid must be non-negative and strictly increasing");
    }
  }
  EnsembleConfig point_cfg = cfg;
  point_cfg.time_samples_per_gate = 1;
  point_cfg.keep_density_matrices = true;

  RamseyResult res;
  res.variant = variant;
  res.wait_times = wait_grid;
  const StateVector initial = StateVector::basis(2, 0);
  for (std::size_t i = 0; i < wait_grid.size(); ++i) {
    point_cfg.rng_seed = point_seed(cfg.rng_seed, i);
    const auto rep = run_ensemble(ramsey_circuit(variant, wait_grid[i]), initial, static_fields, noise, point_cfg);
    double p = std::clamp(rep.avg_rho.back().matrix()(ramsey_target(), ramsey_target()).real(), 0.0, 1.0);
    if (opts.shots > 0) {
      std::mt19937_64 rng(point_seed(~cfg.rng_seed, i));
      std::binomial_distribution<std::size_t> shots(opts.shots, p);
      p = static_cast<double>(shots(rng)) / static_cast<double>(opts.shots);
    }
    res.probabilities.push_back(p);
    res.realizations.push_back(rep.n_realizations_used);
    res.converged.push_back(rep.converged);
  }
  res.fit = fit_envelope(res.wait_times, res.probabilities);
  res.t2_effective = t2_effective(res.fit.sigma2);
  res.n_oscillations = res.fit.infinite_t2 ? std::numeric_limits<double>::infinity()
                                           : res.fit.omega * res.t2_effective / (2.0 * std::numbers::pi);
  return res;
}

CorrelationEstimate extract_s12(double rate_plus, double rate_minus, double rate_1, double rate_2,
                                double rate_uncertainty) {
  if (rate_plus < 0.0 || rate_minus < 0.0 || rate_1 < 0.0 || rate_2 < 0.0 || rate_uncertainty < 0.0) {
    throw std::invalid_argument("rates must be non-negative");
  }
  CorrelationEstimate e;
  e.rate_plus = rate_plus;
  e.rate_minus = rate_minus;
  e.rate_1 = rate_1;
  e.rate_2 = rate_2;
  e.s12_hat = (rate_plus - rate_minus) / 4.0;
  const double norm = std::sqrt(rate_1 * rate_2);
  e.c_hat = norm > 0.0 ? e.s12_hat / norm : std::numeric_limits<double>::quiet_NaN();
  e.sum_rule_residual = rate_plus + rate_minus - 2.0 * (rate_1 + rate_2);
  const double scale = rate_plus + rate_minus + 2.0 * (rate_1 + rate_2);
  e.sum_rule_warning = std::abs(e.sum_rule_residual) > 3.0 * rate_uncertainty + 1e-9 * scale;
  return e;
}

double sum_rule_uncertainty(const EnvelopeFit& plus, const EnvelopeFit& minus, const EnvelopeFit& q1,
                            const EnvelopeFit& q2) {
  auto sq = [](double x) { return x * x; };
  return std::sqrt(sq(plus.sigma2_stderr) + sq(minus.sigma2_stderr) + 4.0 * sq(q1.sigma2_stderr) +
                   4.0 * sq(q2.sigma2_stderr));
}

std::string classify_dfs(double t2_plus, double t2_minus, double ratio_threshold) {
  if (!(t2_plus > 0.0) || !(t2_minus > 0.0)) throw std::invalid_argument("T2 values must be positive");
  if (!(ratio_threshold >= 1.0)) throw std::invalid_argument("ratio threshold must be >= 1");
  const bool inf_p = std::isinf(t2_plus);
  const bool inf_m = std::isinf(t2_minus);
  if (inf_p && inf_m) return "none";
  if (inf_p) return "+";
  if (inf_m) return "-";
  if (t2_plus / t2_minus > ratio_threshold) return "+";
  if (t2_minus / t2_plus > ratio_threshold) return "-";
  return "none";
}

}  // namespace corrnoise
