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

#include "local_ops.hpp"

#include <set>
#include <string>

namespace qdpv::internal {

void validate_targets(const std::vector<int>& targets, int n_qubits) {
  if (targets.empty()) {
    throw InvalidTarget("operator needs at least one target qubit");
  }
  std::set<int> seen;
  for (int t : targets) {
    if (t < 0 || t >= n_qubits) {
      throw InvalidTarget("target qubit " + std::to_string(t) +
                          " out of range for " + std::to_string(n_qubits) +
                          " qubits");
    }
    if (!seen.insert(t).second) {
      throw InvalidTarget("duplicate target qubit " + std::to_string(t));
    }
  }
}

TargetIndexer::TargetIndexer(const std::vector<int>& targets,
                             int n_qubits_total)
    : n_qubits(n_qubits_total), n_local(static_cast<int>(targets.size())) {
  validate_targets(targets, n_qubits_total);
  local_dim = Eigen::Index{1} << n_local;
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;

  std::vector<Eigen::Index> bitpos(targets.size());
  for (std::size_t j = 0; j < targets.size(); ++j) {
    bitpos[j] = n_qubits - 1 - targets[j];
    target_mask |= Eigen::Index{1} << bitpos[j];
  }
  offsets.assign(static_cast<std::size_t>(local_dim), 0);
  for (Eigen::Index l = 0; l < local_dim; ++l) {
    Eigen::Index bits = 0;
    for (std::size_t j = 0; j < targets.size(); ++j) {
      const Eigen::Index bit = (l >> (n_local - 1 - static_cast<int>(j))) & 1;
      bits |= bit << bitpos[j];
    }
    offsets[static_cast<std::size_t>(l)] = bits;
  }
  bases.reserve(static_cast<std::size_t>(dim >> n_local));
  for (Eigen::Index i = 0; i < dim; ++i) {
    if ((i & target_mask) == 0) bases.push_back(i);
  }
}

void apply_local_left(const Matrix& g, const TargetIndexer& ti, Matrix& m) {
  const Eigen::Index ld = ti.local_dim;
  std::vector<Eigen::Index> rows(static_cast<std::size_t>(ld));
  Matrix block(ld, m.cols());
  for (Eigen::Index base : ti.bases) {
    for (Eigen::Index l = 0; l < ld; ++l) {
      rows[static_cast<std::size_t>(l)] =
          base + ti.offsets[static_cast<std::size_t>(l)];
    }
    block = m(rows, Eigen::all);
    m(rows, Eigen::all) = g * block;
  }
}

void apply_local_right(const Matrix& g, const TargetIndexer& ti, Matrix& m) {
  const Eigen::Index ld = ti.local_dim;
  std::vector<Eigen::Index> cols(static_cast<std::size_t>(ld));
  Matrix block(m.rows(), ld);
  for (Eigen::Index base : ti.bases) {
    for (Eigen::Index l = 0; l < ld; ++l) {
      cols[static_cast<std::size_t>(l)] =
          base + ti.offsets[static_cast<std::size_t>(l)];
    }
    block = m(Eigen::all, cols);
    m(Eigen::all, cols) = block * g;
  }
}

bool covers_all_in_order(const std::vector<int>& targets, int n_qubits) {
  if (static_cast<int>(targets.size()) != n_qubits) return false;
  for (int j = 0; j < n_qubits; ++j) {
    if (targets[static_cast<std::size_t>(j)] != j) return false;
  }
  return true;
}

Matrix lift_operator(const Matrix& g, const std::vector<int>& targets,
                     int n_qubits) {
  if (covers_all_in_order(targets, n_qubits)) return g;
  const TargetIndexer ti(targets, n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (g.rows() != ti.local_dim || g.cols() != ti.local_dim) {
    throw DimensionMismatch("operator dim " + std::to_string(g.rows()) +
                            " does not match " +
                            std::to_string(targets.size()) + " target qubits");
  }
  Matrix lifted = Matrix::Identity(dim, dim);
  apply_local_left(g, ti, lifted);
  return lifted;
}

}  // namespace qdpv::internal
