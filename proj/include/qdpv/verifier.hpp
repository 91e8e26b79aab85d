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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qdpv/povm.hpp"

namespace qdpv {

/// Privacy parameters: for all state pairs with trace distance <= eta and
/// all outcome subsets S, sum_S p(rho) <= e^epsilon sum_S p(sigma) + delta.
struct DpParams {
  double epsilon = 0.0;
  double delta = 0.0;
  double eta = 1.0;

  void validate() const;
};

/// Spectral data of one dualized outcome-subset matrix M_S.
struct SubsetReport {
  std::vector<std::string> subset;  // sorted outcome labels
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double delta_s = 0.0;
  double kappa = 1.0;  // +infinity when M_S is singular but nonzero
};

/// An explicit state pair built from the extremal eigenvectors of M_S*:
/// gamma = eta |psi><psi| + (1-eta) |phi><phi|, phi = |phi><phi|.
struct Counterexample {
  DensityMatrix gamma;
  DensityMatrix phi;
  std::vector<std::string> witness_subset;
  double violation_amount = 0.0;  // delta_S* - delta; positive iff violating
  double eta_used = 1.0;
};

struct Verdict {
  bool is_private = false;
  double delta_star = 0.0;  // max_S delta_S, never below 0
  double kappa_star = 1.0;
  double eps_star = 0.0;  // ln[(kappa* - 1) eta + 1]
  std::optional<Counterexample> witness;
  std::vector<SubsetReport> per_subset;  // sorted by delta_s descending
};

struct VerifyOptions {
  /// Largest allowed |O|; subset enumeration is 2^|O|.
  std::size_t max_outcomes = 16;
};

/// W_k = E^dagger(M_k) for every outcome, aligned with povm().labels().
std::vector<HermitianMatrix> subset_matrices(const QuantumAlgorithm& a);

/// delta_S = eta lambda_max - (e^eps + eta - 1) lambda_min.
double delta_s(double lambda_max, double lambda_min, double eps, double eta);

/// Exact (eps, delta)-DP decision within eta; on violation the verdict
/// carries a replayable counterexample for the maximizing subset.
Verdict verify_dp(const QuantumAlgorithm& a, const DpParams& p,
                  const VerifyOptions& options = {});

struct KappaReport {
  double kappa_star;
  SubsetReport best;
  Counterexample witness;  // extremal pair; violating only if kappa* > 1
  std::vector<SubsetReport> per_subset;
};

/// kappa* = max_S lambda_max(M_S)/lambda_min(M_S) and the extremal state
/// pair of the maximizing subset, mixed with eta_for_witness.
KappaReport max_condition_number(const QuantumAlgorithm& a,
                                 double eta_for_witness = 1.0,
                                 const VerifyOptions& options = {});

/// eps*(kappa*, eta) = ln[(kappa* - 1) eta + 1]; +infinity maps to +infinity.
double optimal_epsilon(double kappa_star, double eta);

/// Exact eps-DP decision within eta (delta = 0 specialization).
Verdict verify_eps_dp(const QuantumAlgorithm& a, double epsilon, double eta,
                      const VerifyOptions& options = {});

/// Points (eta, eps*(eta)); nondecreasing and concave in eta.
std::vector<std::pair<double, double>> epsilon_curve(
    const QuantumAlgorithm& a, std::span<const double> etas,
    const VerifyOptions& options = {});

/// Parallel composition: channel E1 (x) E2 with the two-outcome POVM
/// {M_{1,S1} (x) M_{2,S2}, I - M_{1,S1} (x) M_{2,S2}}, labels "0" and "1".
QuantumAlgorithm compose_parallel(const QuantumAlgorithm& a1,
                                  const std::vector<std::string>& subset1,
                                  const QuantumAlgorithm& a2,
                                  const std::vector<std::string>& subset2);

}  // namespace qdpv
