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

#include "qdpv/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "local_ops.hpp"
#include "qdpv/state.hpp"

namespace qdpv {

namespace {

constexpr Complex kI{0.0, 1.0};

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

/// 4x4 controlled-U with the control on the first local qubit.
Matrix controlled(const Matrix& u) {
  Matrix m = Matrix::Identity(4, 4);
  m.block(2, 2, 2, 2) = u;
  return m;
}

Matrix rx(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return mat2(c, -kI * s, -kI * s, c);
}

Matrix ry(double theta) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return mat2(c, -s, s, c);
}

Matrix rz(double theta) {
  return mat2(std::exp(-kI * (theta / 2.0)), 0.0, 0.0,
              std::exp(kI * (theta / 2.0)));
}

}  // namespace

int gate_arity(Gate g) {
  switch (g) {
    case Gate::CX:
    case Gate::CZ:
    case Gate::CRX:
    case Gate::CRY:
    case Gate::CRZ:
    case Gate::SQRT_ISWAP:
      return 2;
    default:
      return 1;
  }
}

int gate_param_count(Gate g) {
  switch (g) {
    case Gate::RX:
    case Gate::RY:
    case Gate::RZ:
    case Gate::CRX:
    case Gate::CRY:
    case Gate::CRZ:
      return 1;
    default:
      return 0;
  }
}

std::string_view gate_name(Gate g) {
  switch (g) {
    case Gate::X: return "X";
    case Gate::Y: return "Y";
    case Gate::Z: return "Z";
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::T: return "T";
    case Gate::SX: return "SX";
    case Gate::RX: return "RX";
    case Gate::RY: return "RY";
    case Gate::RZ: return "RZ";
    case Gate::CX: return "CX";
    case Gate::CZ: return "CZ";
    case Gate::CRX: return "CRX";
    case Gate::CRY: return "CRY";
    case Gate::CRZ: return "CRZ";
    case Gate::SQRT_ISWAP: return "SQRT_ISWAP";
  }
  throw UnknownGate("unhandled gate enum value");
}

std::optional<Gate> gate_from_name(std::string_view name) {
  static const std::unordered_map<std::string_view, Gate> table = {
      {"X", Gate::X},     {"Y", Gate::Y},     {"Z", Gate::Z},
      {"H", Gate::H},     {"S", Gate::S},     {"T", Gate::T},
      {"SX", Gate::SX},   {"RX", Gate::RX},   {"RY", Gate::RY},
      {"RZ", Gate::RZ},   {"CX", Gate::CX},   {"CZ", Gate::CZ},
      {"CRX", Gate::CRX}, {"CRY", Gate::CRY}, {"CRZ", Gate::CRZ},
      {"SQRT_ISWAP", Gate::SQRT_ISWAP},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

Matrix gate_matrix(const GateSpec& g) {
  const int want = gate_param_count(g.gate);
  if (static_cast<int>(g.params.size()) != want) {
    throw InvalidParams(std::string(gate_name(g.gate)) + " expects " +
                        std::to_string(want) + " parameter(s), got " +
                        std::to_string(g.params.size()));
  }
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (g.gate) {
    case Gate::X: return mat2(0, 1, 1, 0);
    case Gate::Y: return mat2(0, -kI, kI, 0);
    case Gate::Z: return mat2(1, 0, 0, -1);
    case Gate::H: return inv_sqrt2 * mat2(1, 1, 1, -1);
    case Gate::S: return mat2(1, 0, 0, kI);
    case Gate::T: return mat2(1, 0, 0, std::exp(kI * (std::numbers::pi / 4.0)));
    case Gate::SX:
      // Principal square root of X.
      return 0.5 * mat2(Complex{1, 1}, Complex{1, -1}, Complex{1, -1},
                        Complex{1, 1});
    case Gate::RX: return rx(g.params[0]);
    case Gate::RY: return ry(g.params[0]);
    case Gate::RZ: return rz(g.params[0]);
    case Gate::CX: return controlled(mat2(0, 1, 1, 0));
    case Gate::CZ: return controlled(mat2(1, 0, 0, -1));
    case Gate::CRX: return controlled(rx(g.params[0]));
    case Gate::CRY: return controlled(ry(g.params[0]));
    case Gate::CRZ: return controlled(rz(g.params[0]));
    case Gate::SQRT_ISWAP: {
      Matrix m = Matrix::Identity(4, 4);
      m(1, 1) = inv_sqrt2;
      m(1, 2) = kI * inv_sqrt2;
      m(2, 1) = kI * inv_sqrt2;
      m(2, 2) = inv_sqrt2;
      return m;
    }
  }
  throw UnknownGate("unhandled gate enum value");
}

void validate_gate(const GateSpec& g, int n_qubits) {
  const int arity = gate_arity(g.gate);
  if (static_cast<int>(g.targets.size()) != arity) {
    throw InvalidTarget(std::string(gate_name(g.gate)) + " acts on " +
                        std::to_string(arity) + " qubit(s), got " +
                        std::to_string(g.targets.size()) + " targets");
  }
  internal::validate_targets(g.targets, n_qubits);
  if (static_cast<int>(g.params.size()) != gate_param_count(g.gate)) {
    throw InvalidParams(std::string(gate_name(g.gate)) +
                        ": wrong parameter count");
  }
}

Matrix lift_gate(const GateSpec& g, int n_qubits) {
  validate_gate(g, n_qubits);
  return internal::lift_operator(gate_matrix(g), g.targets, n_qubits);
}

void validate_circuit(const Circuit& c) {
  qubit_dim(c.n_qubits);
  for (const GateSpec& g : c.gates) validate_gate(g, c.n_qubits);
}

Matrix circuit_unitary(const Circuit& c) {
  validate_circuit(c);
  const Eigen::Index dim = qubit_dim(c.n_qubits);
  Matrix u = Matrix::Identity(dim, dim);
  for (const GateSpec& g : c.gates) {
    const internal::TargetIndexer ti(g.targets, c.n_qubits);
    apply_local_left(gate_matrix(g), ti, u);
  }
  return u;
}

}  // namespace qdpv
