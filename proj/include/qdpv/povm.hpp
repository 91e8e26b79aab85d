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

#include <map>
#include <string>
#include <vector>

#include "qdpv/channel.hpp"

namespace qdpv {

/// A POVM: PSD elements summing to the identity, keyed by outcome labels.
class Povm {
 public:
  Povm(int n_qubits, std::vector<std::string> labels,
       std::vector<HermitianMatrix> elements);

  /// Projectors onto the bitstrings of the listed qubits; outcome labels are
  /// the bitstrings (first listed qubit = leftmost character).
  static Povm computational(int n_qubits, const std::vector<int>& qubits);

  /// The single-element POVM {I}.
  static Povm trivial(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const { return qubit_dim(n_qubits_); }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const HermitianMatrix& element(std::size_t i) const { return elements_.at(i); }

  /// Index of a label; throws InvalidInput for unknown labels.
  std::size_t label_index(const std::string& label) const;

 private:
  int n_qubits_;
  std::vector<std::string> labels_;
  std::vector<HermitianMatrix> elements_;
};

/// The verified object: a Kraus channel followed by a POVM.
class QuantumAlgorithm {
 public:
  QuantumAlgorithm(KrausChannel channel, Povm povm);

  int n_qubits() const noexcept { return channel_.n_qubits(); }
  const KrausChannel& channel() const noexcept { return channel_; }
  const Povm& povm() const noexcept { return povm_; }

 private:
  KrausChannel channel_;
  Povm povm_;
};

/// p_k = tr(M_k E(rho)), aligned with povm().labels(); negative rounding
/// dust is clamped to zero.
std::vector<double> outcome_probabilities(const QuantumAlgorithm& a,
                                          const DensityMatrix& rho);

/// Same probabilities keyed by outcome label.
std::map<std::string, double> measure_distribution(const QuantumAlgorithm& a,
                                                   const DensityMatrix& rho);

}  // namespace qdpv
