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
 * Dense n-qubit states and operators, Pauli embeddings, and time evolution
 * under piecewise-constant Hermitian Hamiltonians (hbar = 1).
 *
 * Basis ordering is |q1 q2 ... qn> with qubit 1 the most significant bit of
 * the basis index.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace corrnoise {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Dense simulation is capped here; the scoring module is the scalable path.
inline constexpr int kMaxQubits = 12;

enum class Pauli { X, Y, Z };

/// 2^n for a validated qubit count.
std::size_t hilbert_dim(int n_qubits);

/// Throws std::invalid_argument unless 1 <= n_qubits <= kMaxQubits.
void check_qubit_count(int n_qubits);

/// Bit position (from the least significant end) of 1-based `qubit`.
inline int bit_of(int qubit, int n_qubits) { return n_qubits - qubit; }

/// Eigenvalue (+1 or -1) of Z_qubit on computational basis state `index`.
inline int z_sign(std::uint64_t index, int qubit, int n_qubits) {
  return ((index >> bit_of(qubit, n_qubits)) & 1U) ? -1 : 1;
}

class DensityMatrix;

class StateVector {
 public:
  /// Throws if the length is not 2^n or the norm deviates from 1 by > 1e-9.
  StateVector(int n_qubits, CVector amps);

  /// Rescales `amps` to unit norm; throws on a zero vector.
  static StateVector normalized(int n_qubits, CVector amps);
  static StateVector basis(int n_qubits, std::uint64_t index);
  /// Parses a bit string such as "01" (qubit 1 first).
  static StateVector from_bits(std::string_view bits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
  double probability(std::uint64_t index) const;

  /// <this|other>
  Complex inner(const StateVector& other) const;
  DensityMatrix projector() const;

 private:
  int n_qubits_;
  CVector amps_;
};

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

class DensityMatrix {
 public:
  /// Throws unless square 2^n, Hermitian within 1e-9 and unit trace within 1e-9.
  DensityMatrix(int n_qubits, CMatrix elems);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(elems_.rows()); }
  const CMatrix& matrix() const { return elems_; }

  Complex trace() const { return elems_.trace(); }
  /// Tr(rho^2)
  double purity() const;
  /// <psi|rho|psi>
  double expectation(const StateVector& psi) const;
  Eigen::VectorXd eigenvalues() const;

 private:
  int n_qubits_;
  CMatrix elems_;
};

class Operator {
 public:
  Operator(int n_qubits, CMatrix elems);

  static Operator identity(int n_qubits);
  static Operator zero(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(elems_.rows()); }
  const CMatrix& matrix() const { return elems_; }

  bool is_hermitian(double tol = 1e-10) const;
  bool is_unitary(double tol = 1e-10) const;
  bool is_diagonal(double tol = 0.0) const;

  /// Applies a unitary operator; throws std::invalid_argument if not unitary.
  StateVector apply(const StateVector& psi) const;

  Operator operator*(const Operator& rhs) const;
  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator operator*(double s) const;
  Operator scaled(Complex s) const;

 private:
  int n_qubits_;
  CMatrix elems_;
};

/// I x ... x sigma_axis x ... x I with sigma at the 1-based `qubit` slot.
Operator embed_pauli(Pauli axis, int qubit, int n_qubits);

/**
 * Embeds a 2^k x 2^k matrix acting on `qubits` (first entry is the most
 * significant local bit) into the n-qubit space.
 */
Operator embed_local(const CMatrix& local, std::span<const int> qubits, int n_qubits);

/// sum_i offsets[i] * Z_{i+1}; diagonal.
Operator dephasing_hamiltonian(std::span<const double> offsets, int n_qubits);

/// Diagonal of sum_i fields[i] * Z_{i+1} without building a matrix.
Eigen::VectorXd z_field_diagonal(std::span<const double> fields, int n_qubits);

/// exp(-i H duration) |state>; H must be Hermitian and duration >= 0.
StateVector evolve(const StateVector& state, const Operator& hamiltonian, double duration);

/**
 * exp(-i H t) for one Hermitian H at many t. Diagonal Hamiltonians use exact
 * per-element phases; anything else is diagonalized once.
 */
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const Operator& hamiltonian);
  /// Diagonal fast path.
  explicit SpectralPropagator(Eigen::VectorXd diagonal);

  bool diagonal() const { return diagonal_; }
  CVector apply(const CVector& amps, double t) const;
  StateVector apply(const StateVector& psi, double t) const;

 private:
  bool diagonal_;
  Eigen::VectorXd energies_;
  CMatrix eigenvectors_;
};

}  // namespace corrnoise
