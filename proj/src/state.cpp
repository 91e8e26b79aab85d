// Copyright 2026 The qdpv authors
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

#include "qdpv/state.hpp"

#include <cmath>
#include <string>

namespace qdpv {

Eigen::Index qubit_dim(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30) {
    throw InvalidInput("n_qubits must be in [1, 30], got " +
                       std::to_string(n_qubits));
  }
  return Eigen::Index{1} << n_qubits;
}

int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  Eigen::Index d = 1;
  while (d < dim && n <= 30) {
    d <<= 1;
    ++n;
  }
  if (d != dim || n < 1) {
    throw InvalidInput("dimension " + std::to_string(dim) +
                       " is not 2^n for n >= 1");
  }
  return n;
}

PureState::PureState(int n_qubits, Vector amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  const Eigen::Index dim = qubit_dim(n_qubits_);
  if (amplitudes_.size() != dim) {
    throw DimensionMismatch("pure state on " + std::to_string(n_qubits_) +
                            " qubits needs " + std::to_string(dim) +
                            " amplitudes, got " +
                            std::to_string(amplitudes_.size()));
  }
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::unit_norm) {
    throw InvalidInput("state vector norm " + std::to_string(norm) +
                       " is not 1");
  }
}

DensityMatrix PureState::to_density() const {
  return DensityMatrix(n_qubits_,
                       HermitianMatrix(amplitudes_ * amplitudes_.adjoint(),
                                       tol::hermitian));
}

DensityMatrix::DensityMatrix(int n_qubits, HermitianMatrix m)
    : n_qubits_(n_qubits), m_(std::move(m)) {
  if (m_.dim() != qubit_dim(n_qubits_)) {
    throw DimensionMismatch("density matrix dim " + std::to_string(m_.dim()) +
                            " does not match " + std::to_string(n_qubits_) +
                            " qubits");
  }
  const double tr = m_.matrix().trace().real();
  if (std::abs(tr - 1.0) > tol::trace_one) {
    throw InvalidInput("density matrix trace " + std::to_string(tr) +
                       " is not 1");
  }
  if (!is_psd(m_, tol::psd)) {
    throw InvalidMatrix("density matrix is not PSD within tolerance");
  }
}

DensityMatrix DensityMatrix::pure(const Vector& amplitudes) {
  return PureState(qubits_for_dim(amplitudes.size()), amplitudes).to_density();
}

DensityMatrix DensityMatrix::basis(int n_qubits, Eigen::Index index) {
  const Eigen::Index dim = qubit_dim(n_qubits);
  if (index < 0 || index >= dim) {
    throw InvalidInput("basis index out of range");
  }
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return pure(v);
}

double DensityMatrix::purity() const {
  return (m_.matrix() * m_.matrix()).trace().real();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return trace_distance(rho.hermitian(), sigma.hermitian());
}

}  // namespace qdpv
