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

// Hand-built reference objects used across the test suites.

#include <cmath>
#include <numbers>

#include "qdpv/verifier.hpp"

namespace qdpv::testing {

inline Vector basis2(int i0, int i1) {
  Vector v = Vector::Zero(4);
  v(2 * i0 + i1) = 1.0;
  return v;
}

/// 2-qubit channel that spreads each basis state into a fixed superposition
/// of three basis states. Its dual maps the two-block computational POVM to
/// (1/3) I and (2/3) I, so every subset matrix has condition number 1.
inline KrausChannel spread_channel() {
  const double a = 1.0 / std::sqrt(3.0);
  const double b = 1.0 / std::sqrt(6.0);
  const Vector e00 = basis2(0, 0), e01 = basis2(0, 1), e10 = basis2(1, 0),
               e11 = basis2(1, 1);
  std::vector<Matrix> kraus;
  kraus.push_back(a * (e00 + e10 + e11) * e00.adjoint());
  kraus.push_back(a * (e01 + e10 + e11) * e01.adjoint());
  kraus.push_back(b * (e00 + e01 + 2.0 * e10) * e10.adjoint());
  kraus.push_back(b * (e00 + e01 + 2.0 * e11) * e11.adjoint());
  return KrausChannel::from_kraus(2, std::move(kraus));
}

/// Basis-rerouting noise: |01> is merged into |10>, everything else is kept.
/// Composed after spread_channel() it makes one dual subset matrix singular.
inline KrausChannel merge_noise() {
  const Vector e00 = basis2(0, 0), e01 = basis2(0, 1), e10 = basis2(1, 0),
               e11 = basis2(1, 1);
  std::vector<Matrix> kraus;
  kraus.push_back(e00 * e00.adjoint());
  kraus.push_back(e10 * e01.adjoint());
  kraus.push_back(e10 * e10.adjoint());
  kraus.push_back(e11 * e11.adjoint());
  return KrausChannel::from_kraus(2, std::move(kraus));
}

/// {|00><00| + |01><01|, |10><10| + |11><11|} with labels "0" and "1":
/// a measurement of the first qubit.
inline Povm block_povm() { return Povm::computational(2, {0}); }

inline QuantumAlgorithm spread_algorithm() {
  return QuantumAlgorithm(spread_channel(), block_povm());
}

inline QuantumAlgorithm spread_merge_algorithm() {
  return QuantumAlgorithm(compose_channels(merge_noise(), spread_channel()),
                          block_povm());
}

/// Two-qubit layered circuit: RY and RZ on both qubits, an entangling CZ,
/// then RX on both qubits.
inline Circuit layered_2q_circuit() {
  const double pi = std::numbers::pi;
  Circuit c;
  c.n_qubits = 2;
  c.gates = {
      {Gate::RY, {-pi / 2.0}, {0}}, {Gate::RY, {-pi / 2.0}, {1}},
      {Gate::RZ, {pi / 2.0}, {0}},  {Gate::RZ, {pi / 2.0}, {1}},
      {Gate::CZ, {}, {0, 1}},       {Gate::RX, {pi}, {0}},
      {Gate::RX, {pi}, {1}},
  };
  return c;
}

/// 1-qubit Hadamard followed by bit-flip noise at p = 0.1: every dualized
/// outcome matrix has spectrum {0.9, 0.1}, so kappa* = 9.
inline QuantumAlgorithm hadamard_bitflip_algorithm() {
  Circuit c;
  c.n_qubits = 1;
  c.gates = {{Gate::H, {}, {0}}};
  const NoiseInjection noise{NoiseKind::BitFlip, 0.1,
                             NoisePlacement::OncePerQubitAtEnd};
  return QuantumAlgorithm(circuit_to_channel(c, noise),
                          Povm::computational(1, {0}));
}

}  // namespace qdpv::testing
