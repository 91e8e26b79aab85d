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
#include <string>
#include <string_view>
#include <vector>

#include "qdpv/linalg.hpp"

namespace qdpv {

// Supported gate set. Controlled gates list the control qubit first.
enum class Gate {
  X,
  Y,
  Z,
  H,
  S,
  T,
  SX,
  RX,
  RY,
  RZ,
  CX,
  CZ,
  CRX,
  CRY,
  CRZ,
  SQRT_ISWAP,
};

int gate_arity(Gate g);
int gate_param_count(Gate g);
std::string_view gate_name(Gate g);
std::optional<Gate> gate_from_name(std::string_view name);

struct GateSpec {
  Gate gate;
  std::vector<double> params;   // rotation angles in radians
  std::vector<int> targets;     // control first for controlled gates
};

/// The 2x2 or 4x4 unitary of the gate itself.
Matrix gate_matrix(const GateSpec& g);

/// Targets distinct and in [0, n); arity and parameter count match.
void validate_gate(const GateSpec& g, int n_qubits);

/// The 2^n x 2^n unitary acting as gate_matrix(g) on g.targets (in the
/// given order, possibly non-adjacent or permuted) and identity elsewhere.
/// Qubit 0 is the leftmost tensor factor (bit weight 2^(n-1)).
Matrix lift_gate(const GateSpec& g, int n_qubits);

struct Circuit {
  int n_qubits = 1;
  std::vector<GateSpec> gates;
};

void validate_circuit(const Circuit& c);

/// Product U_d ... U_1 of the lifted gate unitaries.
Matrix circuit_unitary(const Circuit& c);

}  // namespace qdpv
