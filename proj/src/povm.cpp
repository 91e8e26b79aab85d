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

#include "qdpv/povm.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "local_ops.hpp"

namespace qdpv {

Povm::Povm(int n_qubits, std::vector<std::string> labels,
           std::vector<HermitianMatrix> elements)
    : n_qubits_(n_qubits),
      labels_(std::move(labels)),
      elements_(std::move(elements)) {
  const Eigen::Index d = qubit_dim(n_qubits_);
  if (elements_.empty()) {
    throw InvalidInput("POVM needs at least one element");
  }
  if (labels_.size() != elements_.size()) {
    throw InvalidInput("POVM has " + std::to_string(elements_.size()) +
                       " elements but " + std::to_string(labels_.size()) +
                       " labels");
  }
  std::set<std::string> seen;
  for (const std::string& label : labels_) {
    if (label.empty() || !seen.insert(label).second) {
      throw InvalidInput("POVM labels must be nonempty and unique");
    }
  }
  Matrix sum = Matrix::Zero(d, d);
  for (const HermitianMatrix& m : elements_) {
    if (m.dim() != d) {
      throw DimensionMismatch("POVM element dim " + std::to_string(m.dim()) +
                              " does not match " + std::to_string(n_qubits_) +
                              " qubits");
    }
    if (!is_psd(m, tol::psd)) {
      throw InvalidMatrix("POVM element is not PSD within tolerance");
    }
    sum += m.matrix();
  }
  const double defect = (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (!(defect <= tol::completeness)) {
    throw InvalidMatrix("POVM elements do not sum to identity: deviation " +
                        std::to_string(defect));
  }
}

Povm Povm::computational(int n_qubits, const std::vector<int>& qubits) {
  internal::validate_targets(qubits, n_qubits);
  const int q = static_cast<int>(qubits.size());
  const Eigen::Index d = qubit_dim(n_qubits);
  const Eigen::Index outcomes = Eigen::Index{1} << q;

  std::vector<std::string> labels;
  std::vector<HermitianMatrix> elements;
  labels.reserve(static_cast<std::size_t>(outcomes));
  elements.reserve(static_cast<std::size_t>(outcomes));
  for (Eigen::Index b = 0; b < outcomes; ++b) {
    std::string label(static_cast<std::size_t>(q), '0');
    Eigen::VectorXd diag = Eigen::VectorXd::Ones(d);
    for (int j = 0; j < q; ++j) {
      const Eigen::Index bit = (b >> (q - 1 - j)) & 1;
      label[static_cast<std::size_t>(j)] = bit ? '1' : '0';
      const Eigen::Index pos = n_qubits - 1 - qubits[static_cast<std::size_t>(j)];
      for (Eigen::Index i = 0; i < d; ++i) {
        if (((i >> pos) & 1) != bit) diag(i) = 0.0;
      }
    }
    elements.emplace_back(Matrix(diag.cast<Complex>().asDiagonal()));
    labels.push_back(std::move(label));
  }
  return Povm(n_qubits, std::move(labels), std::move(elements));
}

Povm Povm::trivial(int n_qubits) {
  const Eigen::Index d = qubit_dim(n_qubits);
  std::vector<HermitianMatrix> elements;
  elements.emplace_back(Matrix(Matrix::Identity(d, d)));
  return Povm(n_qubits, {"0"}, std::move(elements));
}

std::size_t Povm::label_index(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidInput("unknown outcome label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

QuantumAlgorithm::QuantumAlgorithm(KrausChannel channel, Povm povm)
    : channel_(std::move(channel)), povm_(std::move(povm)) {
  if (channel_.n_qubits() != povm_.n_qubits()) {
    throw DimensionMismatch("channel on " + std::to_string(channel_.n_qubits()) +
                            " qubits, POVM on " +
                            std::to_string(povm_.n_qubits()));
  }
}

std::vector<double> outcome_probabilities(const QuantumAlgorithm& a,
                                          const DensityMatrix& rho) {
  const DensityMatrix out = apply_channel(a.channel(), rho);
  std::vector<double> probs(a.povm().size());
  for (std::size_t k = 0; k < a.povm().size(); ++k) {
    // tr(M rho) = sum_ij conj(M(i,j)) rho(i,j) for Hermitian M.
    const double p = a.povm()
                         .element(k)
                         .matrix()
                         .cwiseProduct(out.matrix().conjugate())
                         .sum()
                         .real();
    probs[k] = std::max(p, 0.0);
  }
  return probs;
}

std::map<std::string, double> measure_distribution(const QuantumAlgorithm& a,
                                                   const DensityMatrix& rho) {
  const std::vector<double> probs = outcome_probabilities(a, rho);
  std::map<std::string, double> dist;
  for (std::size_t k = 0; k < a.povm().size(); ++k) {
    dist[a.povm().labels()[k]] = probs[k];
  }
  return dist;
}

}  // namespace qdpv
