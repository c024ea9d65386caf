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

#include "corrnoise/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace corrnoise {
namespace {

constexpr double kNormTol = 1e-9;

void check_square(const CMatrix& m, int n_qubits, const char* what) {
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
  if (m.rows() != d || m.cols() != d) {
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(d) + "x" +
                                std::to_string(d) + " matrix, got " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()));
  }
}

CMatrix pauli_matrix(Pauli axis) {
  CMatrix m(2, 2);
  const Complex i(0.0, 1.0);
  switch (axis) {
    case Pauli::X: m << 0.0, 1.0, 1.0, 0.0; break;
    case Pauli::Y: m << 0.0, -i, i, 0.0; break;
    case Pauli::Z: m << 1.0, 0.0, 0.0, -1.0; break;
  }
  return m;
}

}  // namespace

std::size_t hilbert_dim(int n_qubits) {
  check_qubit_count(n_qubits);
  return std::size_t{1} << n_qubits;
}

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n_qubits) + " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
}

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(int n_qubits, CVector amps) : n_qubits_(n_qubits), amps_(std::move(amps)) {
  if (static_cast<std::size_t>(amps_.size()) != hilbert_dim(n_qubits)) {
    throw std::invalid_argument("state vector length " + std::to_string(amps_.size()) +
                                " does not match 2^" + std::to_string(n_qubits));
  }
  if (std::abs(amps_.squaredNorm() - 1.0) > kNormTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::normalized(int n_qubits, CVector amps) {
  const double norm = amps.norm();
  if (norm == 0.0) throw std::invalid_argument("cannot normalize a zero vector");
  amps /= norm;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  const auto d = hilbert_dim(n_qubits);
  if (index >= d) {
    throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
  }
  CVector amps = CVector::Zero(static_cast<Eigen::Index>(d));
  amps[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_bits(std::string_view bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("basis label '" + std::string(bits) + "' is not a bit string");
    }
    index = (index << 1U) | static_cast<std::uint64_t>(c - '0');
  }
  return basis(static_cast<int>(bits.size()), index);
}

double StateVector::probability(std::uint64_t index) const {
  if (index >= dim()) throw std::out_of_range("basis index out of range");
  return std::norm(amps_[static_cast<Eigen::Index>(index)]);
}

Complex StateVector::inner(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  return amps_.dot(other.amps_);
}

DensityMatrix StateVector::projector() const {
  return DensityMatrix(n_qubits_, amps_ * amps_.adjoint());
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(a.inner(b)); }

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(int n_qubits, CMatrix elems)
    : n_qubits_(n_qubits), elems_(std::move(elems)) {
  check_square(elems_, n_qubits, "density matrix");
  if ((elems_ - elems_.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(elems_.trace() - Complex(1.0)) > kNormTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
}

double DensityMatrix::purity() const {
  // Tr(rho^2) = sum_ij |rho_ij|^2 for Hermitian rho.
  return elems_.cwiseAbs2().sum();
}

double DensityMatrix::expectation(const StateVector& psi) const {
  if (psi.n_qubits() != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  return psi.amplitudes().dot(elems_ * psi.amplitudes()).real();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(elems_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// ---------------------------------------------------------------------------
// Operator

Operator::Operator(int n_qubits, CMatrix elems) : n_qubits_(n_qubits), elems_(std::move(elems)) {
  check_square(elems_, n_qubits, "operator");
}

Operator Operator::identity(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
  return Operator(n_qubits, CMatrix::Identity(d, d));
}

Operator Operator::zero(int n_qubits) {
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n_qubits));
  return Operator(n_qubits, CMatrix::Zero(d, d));
}

bool Operator::is_hermitian(double tol) const {
  return (elems_ - elems_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_unitary(double tol) const {
  const auto d = elems_.rows();
  return (elems_.adjoint() * elems_ - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

bool Operator::is_diagonal(double tol) const {
  const auto d = elems_.rows();
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r) {
      if (r != c && std::abs(elems_(r, c)) > tol) return false;
    }
  }
  return true;
}

StateVector Operator::apply(const StateVector& psi) const {
  if (psi.n_qubits() != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  if (!is_unitary(1e-9)) throw std::invalid_argument("apply() requires a unitary operator");
  return StateVector::normalized(n_qubits_, elems_ * psi.amplitudes());
}

Operator Operator::operator*(const Operator& rhs) const {
  if (rhs.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  return Operator(n_qubits_, elems_ * rhs.elems_);
}

Operator Operator::operator+(const Operator& rhs) const {
  if (rhs.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  return Operator(n_qubits_, elems_ + rhs.elems_);
}

Operator Operator::operator-(const Operator& rhs) const {
  if (rhs.n_qubits_ != n_qubits_) throw std::invalid_argument("qubit count mismatch");
  return Operator(n_qubits_, elems_ - rhs.elems_);
}

Operator Operator::operator*(double s) const { return Operator(n_qubits_, elems_ * s); }

Operator Operator::scaled(Complex s) const { return Operator(n_qubits_, elems_ * s); }

// ---------------------------------------------------------------------------

Operator embed_pauli(Pauli axis, int qubit, int n_qubits) {
  check_qubit_count(n_qubits);
  if (qubit < 1 || qubit > n_qubits) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " outside [1, " +
                            std::to_string(n_qubits) + "]");
  }
  const int q[] = {qubit};
  return embed_local(pauli_matrix(axis), q, n_qubits);
}

Operator embed_local(const CMatrix& local, std::span<const int> qubits, int n_qubits) {
  const auto d = hilbert_dim(n_qubits);
  const auto k = qubits.size();
  const auto local_dim = std::size_t{1} << k;
  if (static_cast<std::size_t>(local.rows()) != local_dim ||
      static_cast<std::size_t>(local.cols()) != local_dim) {
    throw std::invalid_argument("local matrix size does not match operand count");
  }
  std::uint64_t touched = 0;
  for (int q : qubits) {
    if (q < 1 || q > n_qubits) throw std::out_of_range("operand qubit out of range");
    const std::uint64_t bit = std::uint64_t{1} << bit_of(q, n_qubits);
    if (touched & bit) throw std::invalid_argument("duplicate operand qubit");
    touched |= bit;
  }
  auto local_index = [&](std::uint64_t full) {
    std::uint64_t idx = 0;
    for (int q : qubits) idx = (idx << 1U) | ((full >> bit_of(q, n_qubits)) & 1U);
    return idx;
  };
  auto with_local = [&](std::uint64_t base, std::uint64_t idx) {
    std::uint64_t full = base;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t b = (idx >> (k - 1 - j)) & 1U;
      if (b) full |= std::uint64_t{1} << bit_of(qubits[j], n_qubits);
    }
    return full;
  };

  CMatrix out = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::uint64_t col = 0; col < d; ++col) {
    const std::uint64_t base = col & ~touched;
    const auto lc = static_cast<Eigen::Index>(local_index(col));
    for (std::uint64_t lr = 0; lr < local_dim; ++lr) {
      const Complex v = local(static_cast<Eigen::Index>(lr), lc);
      if (v != Complex(0.0)) {
        out(static_cast<Eigen::Index>(with_local(base, lr)), static_cast<Eigen::Index>(col)) = v;
      }
    }
  }
  return Operator(n_qubits, std::move(out));
}

Eigen::VectorXd z_field_diagonal(std::span<const double> fields, int n_qubits) {
  const auto d = hilbert_dim(n_qubits);
  if (fields.size() != static_cast<std::size_t>(n_qubits)) {
    throw std::invalid_argument("field list length " + std::to_string(fields.size()) +
                                " does not match qubit count " + std::to_string(n_qubits));
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d));
  for (std::uint64_t k = 0; k < d; ++k) {
    double e = 0.0;
    for (int q = 1; q <= n_qubits; ++q) e += fields[static_cast<std::size_t>(q - 1)] * z_sign(k, q, n_qubits);
    diag[static_cast<Eigen::Index>(k)] = e;
  }
  return diag;
}

Operator dephasing_hamiltonian(std::span<const double> offsets, int n_qubits) {
  const Eigen::VectorXd diag = z_field_diagonal(offsets, n_qubits);
  return Operator(n_qubits, diag.cast<Complex>().asDiagonal());
}

StateVector evolve(const StateVector& state, const Operator& hamiltonian, double duration) {
  if (duration < 0.0) throw std::invalid_argument("evolution duration must be non-negative");
  if (state.n_qubits() != hamiltonian.n_qubits()) throw std::invalid_argument("qubit count mismatch");
  return SpectralPropagator(hamiltonian).apply(state, duration);
}

// ---------------------------------------------------------------------------
// SpectralPropagator

SpectralPropagator::SpectralPropagator(const Operator& hamiltonian) : diagonal_(false) {
  if (!hamiltonian.is_hermitian(1e-10)) {
    throw std::invalid_argument("Hamiltonian is not Hermitian");
  }
  if (hamiltonian.is_diagonal()) {
    diagonal_ = true;
    energies_ = hamiltonian.matrix().diagonal().real();
    return;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hamiltonian.matrix());
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  energies_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

SpectralPropagator::SpectralPropagator(Eigen::VectorXd diagonal)
    : diagonal_(true), energies_(std::move(diagonal)) {}

CVector SpectralPropagator::apply(const CVector& amps, double t) const {
  CVector phases(energies_.size());
  for (Eigen::Index k = 0; k < energies_.size(); ++k) {
    phases[k] = std::polar(1.0, -energies_[k] * t);
  }
  if (diagonal_) return phases.cwiseProduct(amps);
  return eigenvectors_ * phases.cwiseProduct(eigenvectors_.adjoint() * amps);
}

StateVector SpectralPropagator::apply(const StateVector& psi, double t) const {
  if (static_cast<Eigen::Index>(psi.dim()) != energies_.size()) {
    throw std::invalid_argument("state dimension does not match propagator");
  }
  if (t == 0.0) return psi;
  return StateVector::normalized(psi.n_qubits(), apply(psi.amplitudes(), t));
}

}  // namespace corrnoise
