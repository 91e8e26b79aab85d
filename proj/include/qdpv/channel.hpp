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

#include <cstddef>
#include <vector>

#include "qdpv/gates.hpp"
#include "qdpv/state.hpp"

namespace qdpv {

/// One completeness-preserving step of a channel: an explicit Kraus list
/// acting on `targets` (identity on the other qubits). A full-dimension
/// stage uses targets 0..n-1.
struct KrausStage {
  std::vector<int> targets;
  std::vector<Matrix> ops;  // each 2^targets.size() square
};

/// Default cap on the number of (virtual) Kraus operators: 4^n.
std::size_t default_kraus_cap(int n_qubits);

/// A completely positive trace-preserving map, stored as a composition of
/// validated Kraus stages. The composite Kraus list {... F_j E_i ...} is
/// never materialized implicitly; `flattened()` builds it on demand under
/// the configured cap. Forward and dual actions fold over stages, which
/// keeps verification tractable when the product count is astronomical.
class KrausChannel {
 public:
  /// Channel from one explicit full-dimension Kraus list.
  static KrausChannel from_kraus(int n_qubits, std::vector<Matrix> kraus);

  /// Channel from a stage sequence (stage 0 acts first).
  static KrausChannel from_stages(int n_qubits, std::vector<KrausStage> stages,
                                  std::size_t kraus_cap = 0);

  static KrausChannel identity(int n_qubits);

  int n_qubits() const noexcept { return n_qubits_; }
  Eigen::Index dim() const { return qubit_dim(n_qubits_); }
  const std::vector<KrausStage>& stages() const noexcept { return stages_; }

  /// Product of the per-stage Kraus counts (may be astronomically large,
  /// hence a double).
  double virtual_kraus_count() const;

  /// The explicit composite Kraus list, all cross-stage products, lifted to
  /// full dimension. Throws ResourceLimit beyond the cap (default 4^n) or a
  /// hard memory guard.
  std::vector<Matrix> flattened(std::size_t kraus_cap = 0) const;

 private:
  KrausChannel(int n_qubits, std::vector<KrausStage> stages)
      : n_qubits_(n_qubits), stages_(std::move(stages)) {}

  int n_qubits_ = 1;
  std::vector<KrausStage> stages_;
};

/// E(rho) = sum_k E_k rho E_k^dagger, re-hermitized and re-validated.
DensityMatrix apply_channel(const KrausChannel& e, const DensityMatrix& rho);

/// E^dagger(M) = sum_k E_k^dagger M E_k, hermitized. Satisfies
/// tr(E^dagger(M) rho) = tr(M E(rho)).
HermitianMatrix dual_apply(const KrausChannel& e, const HermitianMatrix& m);

/// Composite acting as first, then second; Kraus list is the set of all
/// products {F_j E_i}, kept in staged form. Throws ResourceLimit when the
/// virtual product count exceeds the cap (default 4^n).
KrausChannel compose_channels(const KrausChannel& second,
                              const KrausChannel& first,
                              std::size_t kraus_cap = 0);

/// a on qubits 0..n_a-1, b on qubits n_a..n_a+n_b-1.
KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b);

enum class NoiseKind { BitFlip, PhaseFlip, BitPhaseFlip, Depolarizing };

std::string_view noise_kind_name(NoiseKind kind);

/// Flip kinds: {sqrt(1-p) I, sqrt(p) U}; depolarizing:
/// {sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z}; on `target`.
KrausChannel noise_channel(NoiseKind kind, double p, int target, int n_qubits);

enum class NoisePlacement {
  None,
  AfterEachGateOnTouchedQubits,
  OncePerQubitAtEnd,
};

struct NoiseInjection {
  NoiseKind kind = NoiseKind::Depolarizing;
  double p = 0.0;
  NoisePlacement placement = NoisePlacement::None;
};

/// Lifted gate unitaries as singleton stages, interleaved with noise stages
/// per the placement policy. Placement None yields the single-stage channel
/// {U} with U the dense circuit unitary.
KrausChannel circuit_to_channel(const Circuit& c, const NoiseInjection& noise,
                                std::size_t kraus_cap = 0);

}  // namespace qdpv
