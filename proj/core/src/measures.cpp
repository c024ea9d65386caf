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

#include "corrnoise/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace corrnoise {
namespace {

// Z-eigenvalue vector s(k) of basis state k, centered by `mean`.
Eigen::VectorXd centered_signs(std::uint64_t k, int n, const Eigen::VectorXd& mean) {
  Eigen::VectorXd s(n);
  for (int q = 1; q <= n; ++q) s[q - 1] = z_sign(k, q, n) - mean[q - 1];
  return s;
}

void check_dims(int state_qubits, const NoiseModel& noise) {
  if (state_qubits != noise.n_qubits()) {
    throw std::invalid_argument("state has " + std::to_string(state_qubits) +
                                " qubits but the noise model has " + std::to_string(noise.n_qubits()));
  }
}

std::uint64_t parse_basis(const nlohmann::json& j, int n_qubits) {
  if (j.is_number_integer()) return j.get<std::uint64_t>();
  const auto bits = j.get<std::string>();
  if (static_cast<int>(bits.size()) != n_qubits) {
    throw std::invalid_argument("basis label '" + bits + "' does not have " + std::to_string(n_qubits) + " bits");
  }
  std::uint64_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("basis label '" + bits + "' is not a bit string");
    idx = (idx << 1U) | static_cast<std::uint64_t>(c - '0');
  }
  return idx;
}

}  // namespace

DfsSpec::DfsSpec(int n_qubits, std::vector<std::uint64_t> basis_states, std::string sign_label)
    : n_qubits_(n_qubits), basis_(std::move(basis_states)), label_(std::move(sign_label)) {
  const auto dim = hilbert_dim(n_qubits);
  if (basis_.empty() || basis_.size() >= dim) {
    throw std::invalid_argument("DFS dimension must satisfy 1 <= D < 2^n");
  }
  sorted_ = basis_;
  std::sort(sorted_.begin(), sorted_.end());
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end()) {
    throw std::invalid_argument("DFS basis states must be distinct");
  }
  if (sorted_.back() >= dim) throw std::invalid_argument("DFS basis state out of range");
}

DfsSpec DfsSpec::plus() { return DfsSpec(2, {0b00, 0b11}, "+"); }
DfsSpec DfsSpec::minus() { return DfsSpec(2, {0b01, 0b10}, "-"); }

DfsSpec DfsSpec::from_sign(std::string_view sign) {
  if (sign == "+" || sign == "plus") return plus();
  if (sign == "-" || sign == "minus") return minus();
  throw std::invalid_argument("DFS sign must be '+' or '-', got '" + std::string(sign) + "'");
}

bool DfsSpec::contains(std::uint64_t index) const {
  return std::binary_search(sorted_.begin(), sorted_.end(), index);
}

DfsSpec DfsSpec::complement() const {
  std::vector<std::uint64_t> rest;
  for (std::uint64_t k = 0; k < hilbert_dim(n_qubits_); ++k) {
    if (!contains(k)) rest.push_back(k);
  }
  std::string label;
  if (label_ == "+") label = "-";
  if (label_ == "-") label = "+";
  return DfsSpec(n_qubits_, std::move(rest), label);
}

DfsSpec dfs_from_json(const nlohmann::json& j) {
  if (j.is_string()) return DfsSpec::from_sign(j.get<std::string>());
  if (j.contains("sign")) return DfsSpec::from_sign(j.at("sign").get<std::string>());
  const int n = j.at("n_qubits").get<int>();
  std::vector<std::uint64_t> basis;
  for (const auto& b : j.at("basis_states")) basis.push_back(parse_basis(b, n));
  return DfsSpec(n, std::move(basis), j.value("label", std::string{}));
}

nlohmann::json to_json(const DfsSpec& dfs) {
  nlohmann::json basis = nlohmann::json::array();
  for (auto k : dfs.basis_states()) {
    std::string bits(static_cast<std::size_t>(dfs.n_qubits()), '0');
    for (int q = 1; q <= dfs.n_qubits(); ++q) {
      if (z_sign(k, q, dfs.n_qubits()) < 0) bits[static_cast<std::size_t>(q - 1)] = '1';
    }
    basis.push_back(bits);
  }
  return {{"n_qubits", dfs.n_qubits()}, {"basis_states", std::move(basis)}, {"label", dfs.sign_label()}};
}

double d_g(const StateVector& state, const DfsSpec& dfs) {
  if (state.n_qubits() != dfs.n_qubits()) throw std::invalid_argument("state and DFS dimensions differ");
  double outside = 0.0;
  for (std::uint64_t k = 0; k < state.dim(); ++k) {
    if (!dfs.contains(k)) outside += state.probability(k);
  }
  return std::min(outside, 1.0);
}

double d_c(const StateVector& state, const NoiseModel& noise) {
  const int n = state.n_qubits();
  check_dims(n, noise);
  const auto& sigma = noise.covariance();
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(n);
  for (std::uint64_t k = 0; k < state.dim(); ++k) {
    const double p = state.probability(k);
    for (int q = 1; q <= n; ++q) mean[q - 1] += p * z_sign(k, q, n);
  }
  double total = 0.0;
  for (std::uint64_t k = 0; k < state.dim(); ++k) {
    const double p = state.probability(k);
    if (p == 0.0) continue;
    const Eigen::VectorXd s = centered_signs(k, n, mean);
    total += p * s.dot(sigma * s);
  }
  return std::max(total, 0.0);
}

double d_c(const DensityMatrix& rho, const NoiseModel& noise) {
  const int n = rho.n_qubits();
  check_dims(n, noise);
  const auto& m = rho.matrix();
  const CMatrix rho2 = m * m;
  const auto& sigma = noise.covariance();
  const auto d = static_cast<std::uint64_t>(rho.dim());
  double total = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const double sij = sigma(i - 1, j - 1);
      if (sij == 0.0) continue;
      // Z_i, Z_j are diagonal, so both traces reduce to sums over elements.
      double first = 0.0;
      double second = 0.0;
      for (std::uint64_t k = 0; k < d; ++k) {
        const auto ki = static_cast<Eigen::Index>(k);
        first += rho2(ki, ki).real() * z_sign(k, i, n) * z_sign(k, j, n);
        for (std::uint64_t l = 0; l < d; ++l) {
          const auto li = static_cast<Eigen::Index>(l);
          second += (m(ki, li) * m(li, ki)).real() * z_sign(l, i, n) * z_sign(k, j, n);
        }
      }
      total += sij * (first - second);
    }
  }
  return total;
}

McEstimate d_c_mc(const StateVector& state, const NoiseModel& noise, std::size_t n_samples,
                  std::uint64_t seed) {
  const int n = state.n_qubits();
  check_dims(n, noise);
  if (n_samples < 100) throw std::invalid_argument("d_c_mc needs at least 100 samples");
  std::vector<double> probs(state.dim());
  for (std::uint64_t k = 0; k < state.dim(); ++k) probs[k] = state.probability(k);

  std::vector<double> offsets(static_cast<std::size_t>(n));
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t r = 0; r < n_samples; ++r) {
    noise.draw(seed, r, offsets);
    const Eigen::VectorXd h = z_field_diagonal(offsets, n);
    double mean = 0.0;
    double second = 0.0;
    for (std::uint64_t k = 0; k < state.dim(); ++k) {
      const double e = h[static_cast<Eigen::Index>(k)];
      mean += probs[k] * e;
      second += probs[k] * e * e;
    }
    const double value = second - mean * mean;
    sum += value;
    sum_sq += value * value;
  }
  const double ns = static_cast<double>(n_samples);
  McEstimate est;
  est.value = sum / ns;
  est.n_samples = n_samples;
  const double var = std::max(sum_sq / ns - est.value * est.value, 0.0) * ns / (ns - 1.0);
  est.std_error = std::sqrt(var / ns);
  return est;
}

MeasureTrace measure_along_trajectory(const std::vector<TimedState>& trajectory, const DfsSpec& dfs,
                                      const NoiseModel& noise) {
  MeasureTrace out;
  out.times.reserve(trajectory.size());
  out.d_g.reserve(trajectory.size());
  out.d_c.reserve(trajectory.size());
  for (const auto& [t, psi] : trajectory) {
    out.times.push_back(t);
    out.d_g.push_back(d_g(psi, dfs));
    out.d_c.push_back(d_c(psi, noise));
  }
  out.integrated_d_g = trapezoid(out.times, out.d_g);
  out.integrated_d_c = trapezoid(out.times, out.d_c);
  return out;
}

double trapezoid(const std::vector<double>& times, const std::vector<double>& values) {
  if (times.size() != values.size()) throw std::invalid_argument("trapezoid: size mismatch");
  double total = 0.0;
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double dt = times[i] - times[i - 1];
    if (dt < 0.0) throw std::invalid_argument("trapezoid: times must be non-decreasing");
    total += 0.5 * dt * (values[i] + values[i - 1]);
  }
  return total;
}

}  // namespace corrnoise
