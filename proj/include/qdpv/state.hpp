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

#pragma once

#include "qdpv/linalg.hpp"

namespace qdpv {

/// dim = 2^n_qubits, guarded against overflow.
Eigen::Index qubit_dim(int n_qubits);

/// Number of qubits for a dimension that must be a power of two.
int qubits_for_dim(Eigen::Index dim);

class DensityMatrix;

/// A normalized complex state vector on n qubits.
class PureState {
 public:
  PureState(int n_qubits, Vector amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  const Vector& amplitudes() const noexcept { return amplitudes_; }

  DensityMatrix to_density() const;

 private:
  int n_qubits_;
  Vector amplitudes_;
};

/// A mixed quantum state: unit-trace PSD Hermitian matrix of dim 2^n.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, HermitianMatrix m);

  /// |psi><psi| for a (normalized) amplitude vector.
  static DensityMatrix pure(const Vector& amplitudes);

  /// |b><b| for a computational basis index.
  static DensityMatrix basis(int n_qubits, Eigen::Index index);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const noexcept { return m_.dim(); }
  const HermitianMatrix& hermitian() const noexcept { return m_; }
  const Matrix& matrix() const noexcept { return m_.matrix(); }

  /// tr(rho^2); equals 1 for pure states.
  double purity() const;

 private:
  int n_qubits_;
  HermitianMatrix m_;
};

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qdpv
