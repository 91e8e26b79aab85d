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

#include <Eigen/Dense>
#include <complex>

#include "qdpv/errors.hpp"

namespace qdpv {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Centralized numerical tolerances. Every invariant check in the library
// refers to these constants.
namespace tol {
inline constexpr double hermitian = 1e-10;       // Hermitian symmetry defect
inline constexpr double hermitian_guard = 1e-8;  // hermitize() rejection bound
inline constexpr double psd = 1e-9;              // PSD slack on eigenvalues
inline constexpr double eigen_residual = 1e-8;   // backward error of eigenpairs
inline constexpr double completeness = 1e-8;     // Kraus / POVM sum-to-identity
inline constexpr double trace_one = 1e-9;        // unit-trace slack
inline constexpr double unit_norm = 1e-10;       // state vector normalization
}  // namespace tol

/// max_{i,j} |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const Matrix& m);

/// A square complex matrix validated to be Hermitian within tol::hermitian.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(Matrix m, double tolerance = tol::hermitian);

  const Matrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

 private:
  Matrix m_;
};

/// Extremal eigenpairs of a Hermitian matrix with the achieved backward
/// error bound max(|M v - lambda v|_2) over the two pairs.
struct EigenExtremes {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  Vector vec_max;
  Vector vec_min;
  double residual = 0.0;
};

/// Both extremal eigenvalues with unit eigenvectors; throws
/// ConvergenceFailure if the residual bound cannot be met.
EigenExtremes extremal_eigenpairs(const HermitianMatrix& m,
                                  double tolerance = tol::eigen_residual);

/// All eigenvalues, ascending. Shared helper for distance/PSD checks.
Eigen::VectorXd eigenvalues(const HermitianMatrix& m);

/// D(a, b) = 1/2 sum_i |mu_i| over eigenvalues mu of the difference.
double trace_distance(const HermitianMatrix& a, const HermitianMatrix& b);

/// True iff lambda_min(m) >= -tolerance.
bool is_psd(const HermitianMatrix& m, double tolerance = tol::psd);

/// (m + m^dagger)/2. Rejects matrices with a symmetry defect beyond
/// tol::hermitian_guard, which signals a broken channel or POVM upstream.
HermitianMatrix hermitize(const Matrix& m);

}  // namespace qdpv
