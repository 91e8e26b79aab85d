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

// Test-only eigensolver oracle: cyclic Jacobi rotations for complex
// Hermitian matrices. Deliberately independent of the library's solver so
// spectra can be cross-checked through a different algorithm.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qdpv::testing {

/// Eigenvalues in ascending order; eigenvectors (columns, same order) when
/// `vectors` is non-null.
inline Eigen::VectorXd jacobi_eigenvalues(Eigen::MatrixXcd a,
                                          Eigen::MatrixXcd* vectors = nullptr) {
  using Complexd = std::complex<double>;
  const Eigen::Index n = a.rows();
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
  const double scale = std::max(1.0, a.norm());

  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (std::sqrt(off) <= 1e-14 * scale) break;

    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complexd beta = a(p, q);
        const double r = std::abs(beta);
        if (r <= 1e-300) continue;
        const double phase = std::arg(beta);
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * r, alpha - gamma);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        // U = diag(1, e^{-i phase}) * [[c, -s], [s, c]] zeroes a(p, q).
        const Complexd u00 = c;
        const Complexd u01 = -s;
        const Complexd u10 = s * std::exp(Complexd(0.0, -phase));
        const Complexd u11 = c * std::exp(Complexd(0.0, -phase));

        for (Eigen::Index k = 0; k < n; ++k) {  // A <- A U
          const Complexd akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * u00 + akq * u10;
          a(k, q) = akp * u01 + akq * u11;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // A <- U^dagger A
          const Complexd apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
          a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {  // V <- V U
          const Complexd vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * u00 + vkq * u10;
          v(k, q) = vkp * u01 + vkq * u11;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });
  Eigen::VectorXd values(n);
  Eigen::MatrixXcd sorted_vectors(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    values(i) = a(order[static_cast<std::size_t>(i)],
                  order[static_cast<std::size_t>(i)])
                    .real();
    sorted_vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  if (vectors != nullptr) *vectors = sorted_vectors;
  return values;
}

/// Oracle trace distance: half the absolute eigenvalue sum of a - b.
inline double jacobi_trace_distance(const Eigen::MatrixXcd& a,
                                    const Eigen::MatrixXcd& b) {
  return 0.5 * jacobi_eigenvalues(a - b).cwiseAbs().sum();
}

}  // namespace qdpv::testing
