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

#include "qdpv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace qdpv {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// mt19937_64 bits with hand-rolled uniform/gaussian transforms, so draws
/// are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    do {
      u = uniform();
    } while (u == 0.0);
    const double r = std::sqrt(-2.0 * std::log(u));
    const double phi = 2.0 * std::numbers::pi * uniform();
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Vector random_unit_vector(Eigen::Index dim, Rng& rng) {
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = Complex(rng.gaussian(), rng.gaussian());
  }
  const double norm = v.norm();
  if (norm == 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / norm;
}

Matrix random_mixed_matrix(Eigen::Index dim, Rng& rng) {
  std::vector<double> weights(static_cast<std::size_t>(dim));
  double total = 0.0;
  for (double& w : weights) {
    w = rng.uniform() + 1e-12;
    total += w;
  }
  Matrix m = Matrix::Zero(dim, dim);
  for (double w : weights) {
    const Vector psi = random_unit_vector(dim, rng);
    m += (w / total) * (psi * psi.adjoint());
  }
  return m;
}

struct SubsetTable {
  std::vector<std::size_t> order;             // sorted label position -> index
  std::vector<std::vector<std::string>> tuples;  // per mask (1-based offset)
};

SubsetTable build_subset_table(const Povm& povm) {
  const std::size_t m = povm.size();
  if (m > 20) {
    throw ResourceLimit("violation_search enumerates 2^|O| subsets; |O| = " +
                        std::to_string(m) + " is too large");
  }
  SubsetTable table;
  table.order.resize(m);
  std::iota(table.order.begin(), table.order.end(), std::size_t{0});
  std::sort(table.order.begin(), table.order.end(),
            [&](std::size_t i, std::size_t j) {
              return povm.labels()[i] < povm.labels()[j];
            });
  const std::uint32_t total = (std::uint32_t{1} << m) - 1;
  table.tuples.resize(total + 1);
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::uint32_t{1} << j)) {
        table.tuples[mask].push_back(povm.labels()[table.order[j]]);
      }
    }
  }
  return table;
}

/// Best subset gap sum_S p(rho) - e^eps sum_S p(sigma) for one pair. The
/// empty subset contributes gap 0 (it can never violate), which anchors
/// the sampled supremum at the same baseline as delta*.
struct PairGap {
  double gap = 0.0;
  std::uint32_t mask = 0;
};

PairGap best_subset_gap(const QuantumAlgorithm& a, const SubsetTable& table,
                        const DensityMatrix& rho, const DensityMatrix& sigma,
                        double eps) {
  const std::vector<double> p = outcome_probabilities(a, rho);
  const std::vector<double> q = outcome_probabilities(a, sigma);
  const std::size_t m = p.size();
  const double scale = std::exp(eps);
  const std::uint32_t total = (std::uint32_t{1} << m) - 1;
  std::vector<double> sum_p(total + 1, 0.0);
  std::vector<double> sum_q(total + 1, 0.0);
  PairGap best;
  for (std::uint32_t mask = 1; mask <= total; ++mask) {
    const std::uint32_t low = mask & (mask - 1);
    const int bit = std::countr_zero(mask);
    sum_p[mask] = sum_p[low] + p[table.order[static_cast<std::size_t>(bit)]];
    sum_q[mask] = sum_q[low] + q[table.order[static_cast<std::size_t>(bit)]];
    const double gap = sum_p[mask] - scale * sum_q[mask];
    if (gap > best.gap) {
      best.gap = gap;
      best.mask = mask;
    }
  }
  return best;
}

}  // namespace

NeighborPair sample_neighbor_pair(int n_qubits, double eta,
                                  std::uint64_t seed) {
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw InvalidInput("eta must be in (0, 1]");
  }
  const Eigen::Index dim = qubit_dim(n_qubits);
  Rng rng(splitmix64(seed));
  const Matrix sigma = random_mixed_matrix(dim, rng);
  const Vector psi = random_unit_vector(dim, rng);
  const double t = rng.uniform() * eta;
  const Matrix rho = t * (psi * psi.adjoint()) + (1.0 - t) * sigma;
  return NeighborPair{DensityMatrix(n_qubits, hermitize(rho)),
                      DensityMatrix(n_qubits, hermitize(sigma))};
}

std::optional<ViolationWitness> violation_search(
    const QuantumAlgorithm& a, const DpParams& p, int trials,
    std::uint64_t seed, const SearchOptions& options, SearchStats* stats) {
  p.validate();
  if (trials < 1) {
    throw InvalidInput("violation_search needs at least one trial");
  }
  const SubsetTable table = build_subset_table(a.povm());
  SearchStats local;
  local.best_gap = 0.0;  // the empty subset's gap
  std::optional<ViolationWitness> found;

  auto consider = [&](const DensityMatrix& rho, const DensityMatrix& sigma,
                      int trial_index) {
    const PairGap gap = best_subset_gap(a, table, rho, sigma, p.epsilon);
    if (gap.gap > local.best_gap) {
      local.best_gap = gap.gap;
      local.best_gap_subset = table.tuples[gap.mask];
    }
    ++local.trials_run;
    if (!found && gap.gap - p.delta > options.margin_threshold) {
      found = ViolationWitness{rho, sigma, table.tuples[gap.mask],
                               gap.gap - p.delta, trial_index};
    }
  };

  int trial = 0;
  if (options.extremal_mixtures) {
    // The supremum of the gap over pairs within eta is attained at the
    // extremal eigenvector mixtures of the dualized subset matrices, so
    // trying them first certifies tightness.
    std::vector<HermitianMatrix> dual;
    dual.reserve(a.povm().size());
    for (std::size_t k = 0; k < a.povm().size(); ++k) {
      dual.push_back(dual_apply(a.channel(), a.povm().element(k)));
    }
    const std::uint32_t total = (std::uint32_t{1} << a.povm().size()) - 1;
    for (std::uint32_t mask = 1; mask <= total && trial < trials; ++mask) {
      const Eigen::Index dim = a.channel().dim();
      Matrix sum = Matrix::Zero(dim, dim);
      for (std::size_t j = 0; j < a.povm().size(); ++j) {
        if (mask & (std::uint32_t{1} << j)) {
          sum += dual[table.order[j]].matrix();
        }
      }
      const EigenExtremes ext =
          extremal_eigenpairs(HermitianMatrix(std::move(sum)));
      const Matrix phi = ext.vec_min * ext.vec_min.adjoint();
      const Matrix gamma =
          p.eta * (ext.vec_max * ext.vec_max.adjoint()) + (1.0 - p.eta) * phi;
      consider(DensityMatrix(a.n_qubits(), hermitize(gamma)),
               DensityMatrix(a.n_qubits(), hermitize(phi)), trial);
      ++trial;
      if (found) break;
    }
  }
  for (; trial < trials && !found; ++trial) {
    const NeighborPair pair = sample_neighbor_pair(
        a.n_qubits(), p.eta, splitmix64(seed) ^ static_cast<std::uint64_t>(trial));
    consider(pair.rho, pair.sigma, trial);
  }
  if (stats != nullptr) *stats = local;
  return found;
}

bool check_counterexample(const QuantumAlgorithm& a, const Counterexample& c,
                          const DpParams& p) {
  if (c.gamma.n_qubits() != a.n_qubits() ||
      c.phi.n_qubits() != a.n_qubits()) {
    throw DimensionMismatch("counterexample states do not match the algorithm");
  }
  p.validate();
  if (trace_distance(c.gamma, c.phi) > p.eta + 1e-8) return false;

  const std::vector<double> p_gamma = outcome_probabilities(a, c.gamma);
  const std::vector<double> p_phi = outcome_probabilities(a, c.phi);
  double sum_gamma = 0.0;
  double sum_phi = 0.0;
  for (const std::string& label : c.witness_subset) {
    const std::size_t k = a.povm().label_index(label);
    sum_gamma += p_gamma[k];
    sum_phi += p_phi[k];
  }
  const double margin = sum_gamma - std::exp(p.epsilon) * sum_phi - p.delta;
  if (!(margin > 0.0)) return false;
  return std::abs(margin - c.violation_amount) <= 1e-6;
}

}  // namespace qdpv
