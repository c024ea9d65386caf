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

#include "corrnoise/noise.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

namespace corrnoise {
namespace {

constexpr double kCorrelationTol = 1e-12;

std::mt19937_64 realization_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U)};
  return std::mt19937_64(seq);
}

}  // namespace

NoiseModel::NoiseModel(std::vector<double> sigmas, Eigen::MatrixXd correlations)
    : sigmas_(std::move(sigmas)), correlations_(std::move(correlations)) {
  const auto n = static_cast<Eigen::Index>(sigmas_.size());
  if (n == 0) throw std::invalid_argument("noise model needs at least one qubit");
  if (correlations_.rows() != n || correlations_.cols() != n) {
    throw std::invalid_argument("correlation matrix must be " + std::to_string(n) + "x" +
                                std::to_string(n));
  }
  for (double s : sigmas_) {
    if (!(s >= 0.0) || !std::isfinite(s)) throw std::invalid_argument("sigma must be finite and >= 0");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(correlations_(i, i) - 1.0) > kCorrelationTol) {
      throw std::invalid_argument("correlation diagonal must be 1");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const double c = correlations_(i, j);
      if (!std::isfinite(c) || std::abs(c) > 1.0 + kCorrelationTol) {
        throw std::invalid_argument("correlation " + std::to_string(c) + " outside [-1, 1]");
      }
      if (std::abs(c - correlations_(j, i)) > kCorrelationTol) {
        throw std::invalid_argument("correlation matrix must be symmetric");
      }
    }
  }
  // Symmetrize exactly so downstream quadratic forms are bitwise symmetric.
  correlations_ = 0.5 * (correlations_ + correlations_.transpose()).eval();
  correlations_.diagonal().setOnes();

  covariance_.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      covariance_(i, j) = correlations_(i, j) * sigmas_[static_cast<std::size_t>(i)] *
                          sigmas_[static_cast<std::size_t>(j)];
    }
  }

  const double scale = covariance_.cwiseAbs().maxCoeff();
  if (scale > 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(covariance_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10 * scale) {
      throw std::invalid_argument("covariance matrix is not positive semidefinite");
    }
  }

  // Pivoted LDL^T stays exact for rank-deficient Sigma: with c = +-1 and equal
  // sigmas the off-diagonal factor entry is exactly +-1.
  Eigen::LDLT<Eigen::MatrixXd> ldlt(covariance_);
  Eigen::VectorXd d = ldlt.vectorD();
  for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = d[k] > 0.0 ? std::sqrt(d[k]) : 0.0;
  Eigen::MatrixXd lower = ldlt.matrixL();
  factor_ = ldlt.transpositionsP().transpose() * (lower * d.asDiagonal());
}

NoiseModel NoiseModel::zero(int n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("noise model needs at least one qubit");
  return NoiseModel(std::vector<double>(static_cast<std::size_t>(n_qubits), 0.0),
                    Eigen::MatrixXd::Identity(n_qubits, n_qubits));
}

NoiseModel NoiseModel::two_qubit(double sigma1, double sigma2, double c) {
  Eigen::MatrixXd corr(2, 2);
  corr << 1.0, c, c, 1.0;
  return NoiseModel({sigma1, sigma2}, corr);
}

NoiseModel NoiseModel::from_asymmetry(double base_sigma, double r, double c) {
  if (!(r >= 0.0)) throw std::invalid_argument("asymmetry r must be >= 0");
  return two_qubit(r * base_sigma, base_sigma, c);
}

double NoiseModel::asymmetry() const {
  if (sigmas_.size() != 2) throw std::logic_error("asymmetry is defined for two-qubit models");
  return sigmas_[0] / sigmas_[1];
}

double NoiseModel::quadratic_form(std::span<const double> v) const {
  if (v.size() != sigmas_.size()) throw std::invalid_argument("vector length does not match qubit count");
  const Eigen::Map<const Eigen::VectorXd> x(v.data(), static_cast<Eigen::Index>(v.size()));
  return x.dot(covariance_ * x);
}

void NoiseModel::draw(std::uint64_t seed, std::uint64_t index, std::span<double> out) const {
  const auto n = factor_.rows();
  if (static_cast<Eigen::Index>(out.size()) != n) throw std::invalid_argument("output size mismatch");
  auto engine = realization_engine(seed, index);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd z(n);
  for (Eigen::Index k = 0; k < n; ++k) z[k] = normal(engine);
  Eigen::Map<Eigen::VectorXd>(out.data(), n) = factor_ * z;
}

NoiseRealization NoiseModel::realization(std::uint64_t seed, std::uint64_t index) const {
  NoiseRealization r;
  r.offsets.resize(sigmas_.size());
  r.seed = seed;
  r.index = index;
  draw(seed, index, r.offsets);
  return r;
}

NoiseModel build_covariance(std::vector<double> sigmas, Eigen::MatrixXd correlations) {
  return NoiseModel(std::move(sigmas), std::move(correlations));
}

std::vector<NoiseRealization> sample(const NoiseModel& model, std::uint64_t seed, std::size_t count) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<NoiseRealization> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(model.realization(seed, i));
  return out;
}

double variance_of_sum(const NoiseModel& model, std::span<const int> signs) {
  if (signs.size() != static_cast<std::size_t>(model.n_qubits())) {
    throw std::invalid_argument("sign vector length does not match qubit count");
  }
  std::vector<double> v;
  v.reserve(signs.size());
  for (int s : signs) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    v.push_back(static_cast<double>(s));
  }
  return model.quadratic_form(v);
}

nlohmann::json to_json(const NoiseModel& model) {
  nlohmann::json corr = nlohmann::json::array();
  const auto& c = model.correlations();
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < c.cols(); ++j) row.push_back(c(i, j));
    corr.push_back(std::move(row));
  }
  return {{"sigmas", model.sigmas()}, {"correlations", std::move(corr)}};
}

NoiseModel noise_model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("noise model must be a JSON object");
  if (j.contains("base_sigma")) {
    return NoiseModel::from_asymmetry(j.at("base_sigma").get<double>(), j.value("r", 1.0),
                                      j.value("c", 0.0));
  }
  const auto sigmas = j.at("sigmas").get<std::vector<double>>();
  const auto n = static_cast<Eigen::Index>(sigmas.size());
  Eigen::MatrixXd corr = Eigen::MatrixXd::Identity(n, n);
  if (j.contains("correlations")) {
    const auto rows = j.at("correlations").get<std::vector<std::vector<double>>>();
    if (static_cast<Eigen::Index>(rows.size()) != n) {
      throw std::invalid_argument("correlations must have one row per sigma");
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      const auto& row = rows[static_cast<std::size_t>(r)];
      if (static_cast<Eigen::Index>(row.size()) != n) {
        throw std::invalid_argument("correlation rows must have one entry per sigma");
      }
      for (Eigen::Index c = 0; c < n; ++c) corr(r, c) = row[static_cast<std::size_t>(c)];
    }
  }
  return NoiseModel(sigmas, corr);
}

}  // namespace corrnoise
