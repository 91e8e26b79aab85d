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

// Internal kernels applying an operator that acts on a subset of qubits to
// full-dimension matrices without materializing the lifted operator.
// Qubit 0 is the leftmost tensor factor (bit weight 2^(n-1)); local slot j
// of an operator corresponds to targets[j], most significant local bit first.

#include <vector>

#include "qdpv/errors.hpp"
#include "qdpv/linalg.hpp"

namespace qdpv::internal {

struct TargetIndexer {
  int n_qubits = 0;
  int n_local = 0;
  Eigen::Index local_dim = 0;
  Eigen::Index target_mask = 0;
  std::vector<Eigen::Index> offsets;  // local index -> global bits
  std::vector<Eigen::Index> bases;    // global indices with target bits clear

  TargetIndexer(const std::vector<int>& targets, int n_qubits_total);
};

void validate_targets(const std::vector<int>& targets, int n_qubits);

/// m <- lifted(g) * m
void apply_local_left(const Matrix& g, const TargetIndexer& ti, Matrix& m);

/// m <- m * lifted(g)
void apply_local_right(const Matrix& g, const TargetIndexer& ti, Matrix& m);

/// True when targets are exactly 0..n-1 in order (lifted op == op).
bool covers_all_in_order(const std::vector<int>& targets, int n_qubits);

/// Densely materialized lifted operator.
Matrix lift_operator(const Matrix& g, const std::vector<int>& targets,
                     int n_qubits);

}  // namespace qdpv::internal
