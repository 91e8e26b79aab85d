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

#include "qdpv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qdpv {

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

HermitianMatrix::HermitianMatrix(Matrix m, double tolerance) : m_(std::move(m)) {
  if (m_.rows() < 1 || m_.rows() != m_.cols()) {
    throw InvalidMatrix("matrix must be square with dim >= 1, got " +
                        std::to_string(m_.rows()) + "x" +
                        std::to_string(m_.cols()));
  }
  const double defect = hermiticity_defect(m_);
  if (!(defect <= tolerance)) {
    throw InvalidMatrix("matrix is not Hermitian: symmetry defect " +
                        std::to_string(defect));
  }
}

EigenExtremes extremal_eigenpairs(const HermitianMatrix& m, double tolerance) {
  if (!(tolerance > 0.0)) {
    throw InvalidInput("eigenpair residual tolerance must be positive");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigendecomposition did not converge",
                             std::numeric_limits<double>::infinity());
  }
  const Eigen::Index last = m.dim() - 1;
  EigenExtremes out;
  out.lambda_min = solver.eigenvalues()(0);
  out.lambda_max = solver.eigenvalues()(last);
  out.vec_min = solver.eigenvectors().col(0);
  out.vec_max = solver.eigenvectors().col(last);
  const double res_min =
      (m.matrix() * out.vec_min - out.lambda_min * out.vec_min).norm();
  const double res_max =
      (m.matrix() * out.vec_max - out.lambda_max * out.vec_max).norm();
  out.residual = std::max(res_min, res_max);
  const double scale_min = std::max(1.0, std::abs(out.lambda_min));
  const double scale_max = std::max(1.0, std::abs(out.lambda_max));
  if (!(res_min <= tolerance * scale_min && res_max <= tolerance * scale_max)) {
    throw ConvergenceFailure("eigenpair residual " +
                                 std::to_string(out.residual) +
                                 " exceeds tolerance",
                             out.residual);
  }
  return out;
}

Eigen::VectorXd eigenvalues(const HermitianMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m.matrix(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigenvalue computation did not converge",
                             std::numeric_limits<double>::infinity());
  }
  return solver.eigenvalues();
}

double trace_distance(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("trace_distance: dims " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
  const HermitianMatrix diff(a.matrix() - b.matrix(), 2.0 * tol::hermitian);
  return 0.5 * eigenvalues(diff).cwiseAbs().sum();
}

bool is_psd(const HermitianMatrix& m, double tolerance) {
  return eigenvalues(m)(0) >= -tolerance;
}

HermitianMatrix hermitize(const Matrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw InvalidMatrix("hermitize: matrix must be square with dim >= 1");
  }
  const double defect = hermiticity_defect(m);
  if (!(defect <= tol::hermitian_guard)) {
    throw InvalidMatrix("hermitize: symmetry defect " +
                        std::to_string(defect) +
                        " exceeds guard; upstream channel or POVM is broken");
  }
  Matrix sym = 0.5 * (m + m.adjoint());
  // (m + m^dagger)/2 is exactly Hermitian in floating point.
  return HermitianMatrix(std::move(sym), 0.0);
}

}  // namespace qdpv
