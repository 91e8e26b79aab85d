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

#include <cstdint>
#include <optional>

#include "qdpv/verifier.hpp"

namespace qdpv {

// Sampling-based validator that checks the privacy definition directly on
// explicit state pairs. It shares the model-level operations with the
// verifier but none of its subset-scan machinery, which makes it a usable
// cross-check.

struct NeighborPair {
  DensityMatrix rho;
  DensityMatrix sigma;
};

/// Deterministic in `seed`; trace_distance(rho, sigma) <= eta by
/// construction (rho = t psi + (1-t) sigma with t uniform in [0, eta]).
NeighborPair sample_neighbor_pair(int n_qubits, double eta,
                                  std::uint64_t seed);

struct ViolationWitness {
  DensityMatrix rho;
  DensityMatrix sigma;
  std::vector<std::string> subset;
  double margin = 0.0;  // sum_S p(rho) - e^eps sum_S p(sigma) - delta
  int trial_index = -1;
};

struct SearchOptions {
  /// Also try the extremal eigenvector mixtures of every dualized subset
  /// matrix; these attain the supremum, so the search can certify
  /// tightness rather than just soundness.
  bool extremal_mixtures = true;
  /// Margins below this are treated as rounding dust, not violations.
  double margin_threshold = 1e-10;
};

struct SearchStats {
  /// Best sampled value of sum_S p(rho) - e^eps sum_S p(sigma).
  double best_gap = 0.0;
  std::vector<std::string> best_gap_subset;
  int trials_run = 0;
};

/// Evaluates `trials` state pairs (extremal mixtures first, then random
/// neighbor pairs) against every outcome subset; returns the first
/// violating witness by trial index, or nothing.
std::optional<ViolationWitness> violation_search(
    const QuantumAlgorithm& a, const DpParams& p, int trials,
    std::uint64_t seed, const SearchOptions& options = {},
    SearchStats* stats = nullptr);

/// Replays a counterexample from scratch through the model operations:
/// true iff the pair is within eta and violates the privacy inequality on
/// its subset by the recorded amount.
bool check_counterexample(const QuantumAlgorithm& a, const Counterexample& c,
                          const DpParams& p);

}  // namespace qdpv
