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

#include "qdpv/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace qdpv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Ties within these bands are broken lexicographically; without a band the
// winner would depend on last-ulp differences between algebraically equal
// delta_S values computed from different matrices.
constexpr double kDeltaTieBand = 1e-12;
constexpr double kKappaTieBand = 1e-9;

/// lambda_min below this is treated as an exact zero (kappa = +infinity).
double zero_threshold(double lambda_max) {
  return tol::psd * std::max(1.0, lambda_max);
}

double kappa_of(double lambda_max, double lambda_min) {
  if (lambda_max <= zero_threshold(lambda_max)) {
    // Zero matrix: the subset has probability 0 on every state and imposes
    // no constraint.
    return 1.0;
  }
  if (lambda_min <= zero_threshold(lambda_max)) return kInf;
  return lambda_max / lambda_min;
}

struct SubsetScan {
  std::vector<SubsetReport> reports;     // one per nonempty subset, mask order
  std::vector<std::uint32_t> masks;      // mask over sorted label positions
  std::vector<std::size_t> sorted_index; // sorted label position -> povm index
};

/// Spectral scan of all nonempty outcome subsets. Masks index into the
/// label list sorted lexicographically, so tuple comparisons reduce to
/// vector<string> comparisons.
SubsetScan scan_subsets(const QuantumAlgorithm& a,
                        const std::vector<HermitianMatrix>& dual_elements,
                        const DpParams& p, const VerifyOptions& options) {
  const std::size_t m = a.povm().size();
  if (m > options.max_outcomes) {
    throw ResourceLimit("outcome set size " + std::to_string(m) +
                        " exceeds the subset-enumeration cap " +
                        std::to_string(options.max_outcomes));
  }
  if (m > 20) {  // 2^|O| subsets, each an eigensolve
    throw ResourceLimit("subset enumeration over " + std::to_string(m) +
                        " outcomes is not tractable");
  }
  const std::vector<std::string>& labels = a.povm().labels();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return labels[i] < labels[j];
  });

  SubsetScan scan;
  scan.sorted_index = order;
  const std::uint32_t total = (std::uint32_t{1} << m) - 1;
  scan.reports.reserve(total);
  scan.masks.reserve(total);
  const Eigen::Index dim = a.channel().dim();
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    Matrix sum = Matrix::Zero(dim, dim);
    SubsetReport report;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::uint32_t{1} << j)) {
        sum += dual_elements[order[j]].matrix();
        report.subset.push_back(labels[order[j]]);
      }
    }
    const Eigen::VectorXd evs = eigenvalues(HermitianMatrix(std::move(sum)));
    report.lambda_max = evs(evs.size() - 1);
    report.lambda_min = evs(0);
    report.delta_s =
        delta_s(report.lambda_max, report.lambda_min, p.epsilon, p.eta);
    report.kappa = kappa_of(report.lambda_max, report.lambda_min);
    scan.reports.push_back(std::move(report));
    scan.masks.push_back(mask);
  }
  return scan;
}

/// Index of the lexicographically first subset among those whose key is
/// within `band` of the maximum (infinity compares equal to infinity).
std::size_t argmax_with_ties(const std::vector<SubsetReport>& reports,
                             double (*key)(const SubsetReport&), double band) {
  double best = -kInf;
  for (const SubsetReport& r : reports) best = std::max(best, key(r));
  std::size_t chosen = reports.size();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const double k = key(reports[i]);
    const bool tied = std::isinf(best) ? std::isinf(k) && k > 0
                                       : k >= best - band;
    if (!tied) continue;
    if (chosen == reports.size() ||
        reports[i].subset < reports[chosen].subset) {
      chosen = i;
    }
  }
  return chosen;
}

double delta_key(const SubsetReport& r) { return r.delta_s; }
double kappa_key(const SubsetReport& r) { return r.kappa; }

/// State pair built from the extremal eigenvectors of M_S*. The violation
/// amount is delta_S*(eps, eta) - delta, the margin the pair achieves.
Counterexample build_witness(const QuantumAlgorithm& a,
                             const std::vector<HermitianMatrix>& dual_elements,
                             const SubsetReport& report, double eps, double eta,
                             double delta) {
  const Eigen::Index dim = a.channel().dim();
  Matrix sum = Matrix::Zero(dim, dim);
  for (const std::string& label : report.subset) {
    sum += dual_elements[a.povm().label_index(label)].matrix();
  }
  const EigenExtremes ext = extremal_eigenpairs(HermitianMatrix(std::move(sum)));
  const Matrix psi = ext.vec_max * ext.vec_max.adjoint();
  const Matrix phi = ext.vec_min * ext.vec_min.adjoint();
  Matrix gamma = eta * psi + (1.0 - eta) * phi;
  Counterexample witness{
      DensityMatrix(a.n_qubits(), hermitize(gamma)),
      DensityMatrix(a.n_qubits(), hermitize(phi)),
      report.subset,
      delta_s(ext.lambda_max, ext.lambda_min, eps, eta) - delta,
      eta,
  };
  return witness;
}

std::vector<SubsetReport> sorted_by_delta(std::vector<SubsetReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const SubsetReport& a, const SubsetReport& b) {
                     if (a.delta_s != b.delta_s) return a.delta_s > b.delta_s;
                     return a.subset < b.subset;
                   });
  return reports;
}

}  // namespace

void DpParams::validate() const {
  if (!(epsilon >= 0.0)) {
    throw InvalidInput("epsilon must be >= 0");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw InvalidInput("delta must be in [0, 1]");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw InvalidInput("eta must be in (0, 1]; eta = 0 only relates a state "
                       "to itself and is rejected");
  }
}

std::vector<HermitianMatrix> subset_matrices(const QuantumAlgorithm& a) {
  std::vector<HermitianMatrix> dual_elements;
  dual_elements.reserve(a.povm().size());
  for (std::size_t k = 0; k < a.povm().size(); ++k) {
    dual_elements.push_back(dual_apply(a.channel(), a.povm().element(k)));
  }
  return dual_elements;
}

double delta_s(double lambda_max, double lambda_min, double eps, double eta) {
  return eta * lambda_max - (std::exp(eps) + eta - 1.0) * lambda_min;
}

Verdict verify_dp(const QuantumAlgorithm& a, const DpParams& p,
                  const VerifyOptions& options) {
  p.validate();
  const std::vector<HermitianMatrix> dual = subset_matrices(a);
  SubsetScan scan = scan_subsets(a, dual, p, options);

  Verdict verdict;
  verdict.delta_star = 0.0;  // the empty subset contributes 0
  verdict.kappa_star = 1.0;
  for (const SubsetReport& r : scan.reports) {
    verdict.delta_star = std::max(verdict.delta_star, r.delta_s);
    verdict.kappa_star = std::max(verdict.kappa_star, r.kappa);
  }
  verdict.eps_star = optimal_epsilon(verdict.kappa_star, p.eta);
  verdict.is_private = p.delta >= verdict.delta_star - 1e-9;
  if (!verdict.is_private) {
    const std::size_t best =
        argmax_with_ties(scan.reports, delta_key, kDeltaTieBand);
    verdict.witness =
        build_witness(a, dual, scan.reports[best], p.epsilon, p.eta, p.delta);
  }
  verdict.per_subset = sorted_by_delta(std::move(scan.reports));
  return verdict;
}

KappaReport max_condition_number(const QuantumAlgorithm& a,
                                 double eta_for_witness,
                                 const VerifyOptions& options) {
  if (!(eta_for_witness > 0.0 && eta_for_witness <= 1.0)) {
    throw InvalidInput("eta_for_witness must be in (0, 1]");
  }
  const std::vector<HermitianMatrix> dual = subset_matrices(a);
  const DpParams scan_params{0.0, 0.0, eta_for_witness};
  SubsetScan scan = scan_subsets(a, dual, scan_params, options);

  double kappa_star = 1.0;
  for (const SubsetReport& r : scan.reports) {
    kappa_star = std::max(kappa_star, r.kappa);
  }
  const std::size_t best_index =
      argmax_with_ties(scan.reports, kappa_key, kKappaTieBand);
  SubsetReport best = scan.reports[best_index];
  Counterexample witness = build_witness(a, dual, best, /*eps=*/0.0,
                                         eta_for_witness, /*delta=*/0.0);
  return KappaReport{kappa_star, std::move(best), std::move(witness),
                     sorted_by_delta(std::move(scan.reports))};
}

double optimal_epsilon(double kappa_star, double eta) {
  if (!(kappa_star >= 1.0)) {
    throw InvalidInput("kappa_star must be >= 1");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw InvalidInput("eta must be in (0, 1]");
  }
  if (std::isinf(kappa_star)) return kInf;
  return std::log1p((kappa_star - 1.0) * eta);
}

Verdict verify_eps_dp(const QuantumAlgorithm& a, double epsilon, double eta,
                      const VerifyOptions& options) {
  if (!(epsilon >= 0.0)) {
    throw InvalidInput("epsilon must be >= 0");
  }
  KappaReport kappa = max_condition_number(a, eta, options);
  Verdict verdict;
  verdict.kappa_star = kappa.kappa_star;
  verdict.eps_star = optimal_epsilon(kappa.kappa_star, eta);
  verdict.delta_star = 0.0;
  for (SubsetReport& r : kappa.per_subset) {
    r.delta_s = delta_s(r.lambda_max, r.lambda_min, epsilon, eta);
    verdict.delta_star = std::max(verdict.delta_star, r.delta_s);
  }
  kappa.per_subset = sorted_by_delta(std::move(kappa.per_subset));
  verdict.is_private = epsilon >= verdict.eps_star - 1e-12;
  if (!verdict.is_private) {
    // The kappa-scan witness, with the margin it achieves at this epsilon.
    kappa.witness.violation_amount =
        delta_s(kappa.best.lambda_max, kappa.best.lambda_min, epsilon, eta);
    verdict.witness = std::move(kappa.witness);
  }
  verdict.per_subset = std::move(kappa.per_subset);
  return verdict;
}

std::vector<std::pair<double, double>> epsilon_curve(
    const QuantumAlgorithm& a, std::span<const double> etas,
    const VerifyOptions& options) {
  for (double eta : etas) {
    if (!(eta > 0.0 && eta <= 1.0)) {
      throw InvalidInput("curve eta values must be in (0, 1]");
    }
  }
  const std::vector<HermitianMatrix> dual = subset_matrices(a);
  const DpParams scan_params{0.0, 0.0, 1.0};
  SubsetScan scan = scan_subsets(a, dual, scan_params, options);
  double kappa_star = 1.0;
  for (const SubsetReport& r : scan.reports) {
    kappa_star = std::max(kappa_star, r.kappa);
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(etas.size());
  for (double eta : etas) {
    curve.emplace_back(eta, optimal_epsilon(kappa_star, eta));
  }
  return curve;
}

QuantumAlgorithm compose_parallel(const QuantumAlgorithm& a1,
                                  const std::vector<std::string>& subset1,
                                  const QuantumAlgorithm& a2,
                                  const std::vector<std::string>& subset2) {
  const Eigen::Index d1 = a1.channel().dim();
  const Eigen::Index d2 = a2.channel().dim();
  Matrix m1 = Matrix::Zero(d1, d1);
  for (const std::string& label : subset1) {
    m1 += a1.povm().element(a1.povm().label_index(label)).matrix();
  }
  Matrix m2 = Matrix::Zero(d2, d2);
  for (const std::string& label : subset2) {
    m2 += a2.povm().element(a2.povm().label_index(label)).matrix();
  }
  Matrix joint = Eigen::kroneckerProduct(m1, m2);
  Matrix rest = Matrix::Identity(d1 * d2, d1 * d2) - joint;
  std::vector<HermitianMatrix> elements;
  elements.push_back(hermitize(joint));
  elements.push_back(hermitize(rest));
  Povm povm(a1.n_qubits() + a2.n_qubits(), {"0", "1"}, std::move(elements));
  return QuantumAlgorithm(tensor_channels(a1.channel(), a2.channel()),
                          std::move(povm));
}

}  // namespace qdpv
