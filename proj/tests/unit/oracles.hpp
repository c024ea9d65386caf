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

// Independent reference computations for the unit tests.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "corrnoise/circuit.hpp"
#include "corrnoise/linalg.hpp"
#include "corrnoise/measures.hpp"
#include "corrnoise/noise.hpp"

namespace oracle {

using corrnoise::CMatrix;
using corrnoise::Complex;
using corrnoise::CVector;

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

/// Z on 1-based `qubit` via explicit Kronecker products, qubit 1 leftmost.
inline CMatrix z_on(int qubit, int n) {
  CMatrix z(2, 2);
  z << 1, 0, 0, -1;
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 1; q <= n; ++q) out = kron(out, q == qubit ? z : CMatrix::Identity(2, 2));
  return out;
}

/// sum_ij Sigma_ij [Tr(rho^2 Z_i Z_j) - Tr(rho Z_i rho Z_j)]
inline double d_c_trace(const CMatrix& rho, const Eigen::MatrixXd& sigma) {
  const int n = static_cast<int>(sigma.rows());
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const CMatrix zi = z_on(i + 1, n);
      const CMatrix zj = z_on(j + 1, n);
      const Complex v = (rho * rho * zi * zj).trace() - (rho * zi * rho * zj).trace();
      acc += sigma(i, j) * v.real();
    }
  }
  return acc;
}

inline CVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CVector v(1 << n);
  for (auto& a : v) a = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline corrnoise::NoiseModel random_noise(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  }
  const Eigen::MatrixXd s = a * a.transpose() / n;
  std::vector<double> sig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sig[static_cast<std::size_t>(i)] = std::sqrt(s(i, i));
  Eigen::MatrixXd c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) c(i, j) = i == j ? 1.0 : s(i, j) / (sig[static_cast<std::size_t>(i)] * sig[static_cast<std::size_t>(j)]);
  }
  return corrnoise::NoiseModel(sig, c);
}

/// B(G) from the dense embedded unitary with the DFS basis permuted first.
inline std::pair<double, double> dense_block_weights(const corrnoise::GateOp& op, const corrnoise::DfsSpec& dfs,
                                                     int n) {
  const CMatrix u = corrnoise::gate_unitary(op, n).matrix();
  std::vector<Eigen::Index> order;
  for (auto s : dfs.basis_states()) order.push_back(static_cast<Eigen::Index>(s));
  for (Eigen::Index s = 0; s < u.rows(); ++s) {
    if (!dfs.contains(static_cast<std::uint64_t>(s))) order.push_back(s);
  }
  CMatrix p = CMatrix::Zero(u.rows(), u.cols());
  for (Eigen::Index k = 0; k < u.rows(); ++k) p(k, order[static_cast<std::size_t>(k)]) = 1.0;
  const CMatrix g = p * u * p.adjoint();
  const auto d = static_cast<Eigen::Index>(dfs.dimension());
  const Eigen::Index rest = u.rows() - d;
  return {g.topRightCorner(d, rest).cwiseAbs2().sum(), g.bottomLeftCorner(rest, d).cwiseAbs2().sum()};
}

/// Probabilists' Gauss-Hermite nodes and weights (weights sum to 1).
inline std::pair<std::vector<double>, std::vector<double>> gauss_hermite(int m) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(m, m);
  for (int k = 1; k < m; ++k) j(k, k - 1) = j(k - 1, k) = std::sqrt(static_cast<double>(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  std::vector<double> x(static_cast<std::size_t>(m));
  std::vector<double> w(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    x[static_cast<std::size_t>(k)] = es.eigenvalues()[k];
    w[static_cast<std::size_t>(k)] = es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
  }
  return {x, w};
}

/// Final state of a continuous-model run for one fixed offset vector, via matrix exponentials.
inline CVector continuous_final(const corrnoise::Circuit& c, const CVector& psi0, const std::vector<double>& fields,
                                const std::vector<double>& offsets) {
  const int n = c.n_qubits();
  CMatrix hz = CMatrix::Zero(1 << n, 1 << n);
  for (int q = 1; q <= n; ++q) {
    hz += (fields[static_cast<std::size_t>(q - 1)] + offsets[static_cast<std::size_t>(q - 1)]) * z_on(q, n);
  }
  CVector psi = psi0;
  for (const auto& op : c.ops()) {
    if (op.duration == 0.0) {
      psi = corrnoise::gate_unitary(op, n).matrix() * psi;
      continue;
    }
    const CMatrix h = corrnoise::gate_generator(op, n).matrix() / op.duration + hz;
    const CMatrix u = (Complex(0, -op.duration) * h).exp();
    psi = u * psi;
  }
  return psi;
}

/// Ensemble density matrix at the end of a continuous-model run by 2-D quadrature.
inline CMatrix quadrature_rho(const corrnoise::Circuit& c, const CVector& psi0, const std::vector<double>& fields,
                              const corrnoise::NoiseModel& noise, int nodes) {
  const auto [x, w] = gauss_hermite(nodes);
  const Eigen::MatrixXd f = noise.covariance().llt().matrixL();
  CMatrix rho = CMatrix::Zero(psi0.size(), psi0.size());
  for (int a = 0; a < nodes; ++a) {
    for (int b = 0; b < nodes; ++b) {
      Eigen::Vector2d z(x[static_cast<std::size_t>(a)], x[static_cast<std::size_t>(b)]);
      const Eigen::Vector2d d = f * z;
      const CVector psi = continuous_final(c, psi0, fields, {d[0], d[1]});
      rho += w[static_cast<std::size_t>(a)] * w[static_cast<std::size_t>(b)] * psi * psi.adjoint();
    }
  }
  return rho;
}

}  // namespace oracle
