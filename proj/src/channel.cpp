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

#include "qdpv/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "local_ops.hpp"

namespace qdpv {

namespace {

void validate_stage(const KrausStage& stage, int n_qubits) {
  internal::validate_targets(stage.targets, n_qubits);
  if (stage.ops.empty()) {
    throw InvalidMatrix("Kraus stage needs at least one operator");
  }
  const Eigen::Index local_dim = Eigen::Index{1}
                                 << static_cast<int>(stage.targets.size());
  Matrix sum = Matrix::Zero(local_dim, local_dim);
  for (const Matrix& op : stage.ops) {
    if (op.rows() != local_dim || op.cols() != local_dim) {
      throw DimensionMismatch("Kraus operator dim " + std::to_string(op.rows()) +
                              " does not match " +
                              std::to_string(stage.targets.size()) +
                              " target qubits");
    }
    sum += op.adjoint() * op;
  }
  const double defect =
      (sum - Matrix::Identity(local_dim, local_dim)).cwiseAbs().maxCoeff();
  if (!(defect <= tol::completeness)) {
    throw InvalidMatrix("Kraus completeness violated: max deviation " +
                        std::to_string(defect));
  }
}

/// m <- sum_k op_k m op_k^dagger over one stage (forward action).
Matrix stage_forward(const KrausStage& stage, const Matrix& m, int n_qubits) {
  if (internal::covers_all_in_order(stage.targets, n_qubits)) {
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (const Matrix& op : stage.ops) out += op * m * op.adjoint();
    return out;
  }
  const internal::TargetIndexer ti(stage.targets, n_qubits);
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (const Matrix& op : stage.ops) {
    Matrix term = m;
    apply_local_left(op, ti, term);
    apply_local_right(op.adjoint(), ti, term);
    out += term;
  }
  return out;
}

/// m <- sum_k op_k^dagger m op_k over one stage (dual action).
Matrix stage_dual(const KrausStage& stage, const Matrix& m, int n_qubits) {
  if (internal::covers_all_in_order(stage.targets, n_qubits)) {
    Matrix out = Matrix::Zero(m.rows(), m.cols());
    for (const Matrix& op : stage.ops) out += op.adjoint() * m * op;
    return out;
  }
  const internal::TargetIndexer ti(stage.targets, n_qubits);
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (const Matrix& op : stage.ops) {
    Matrix term = m;
    apply_local_left(op.adjoint(), ti, term);
    apply_local_right(op, ti, term);
    out += term;
  }
  return out;
}

std::size_t resolve_cap(std::size_t kraus_cap, int n_qubits) {
  return kraus_cap == 0 ? default_kraus_cap(n_qubits) : kraus_cap;
}

void check_virtual_count(const std::vector<KrausStage>& stages, int n_qubits,
                         std::size_t kraus_cap) {
  const double cap = static_cast<double>(resolve_cap(kraus_cap, n_qubits));
  double count = 1.0;
  for (const KrausStage& stage : stages) {
    count *= static_cast<double>(stage.ops.size());
    if (count > cap) {
      throw ResourceLimit("Kraus operator count exceeds cap " +
                          std::to_string(static_cast<std::size_t>(cap)));
    }
  }
}

std::vector<int> all_qubits(int n_qubits) {
  std::vector<int> t(static_cast<std::size_t>(n_qubits));
  for (int q = 0; q < n_qubits; ++q) t[static_cast<std::size_t>(q)] = q;
  return t;
}

}  // namespace

std::size_t default_kraus_cap(int n_qubits) {
  if (n_qubits >= 31) return std::numeric_limits<std::size_t>::max();
  return std::size_t{1} << (2 * n_qubits);
}

KrausChannel KrausChannel::from_kraus(int n_qubits, std::vector<Matrix> kraus) {
  KrausStage stage{all_qubits(n_qubits), std::move(kraus)};
  std::vector<KrausStage> stages;
  stages.push_back(std::move(stage));
  return from_stages(n_qubits, std::move(stages));
}

KrausChannel KrausChannel::from_stages(int n_qubits,
                                       std::vector<KrausStage> stages,
                                       std::size_t kraus_cap) {
  qubit_dim(n_qubits);
  if (stages.empty()) {
    throw InvalidInput("channel needs at least one Kraus stage");
  }
  for (const KrausStage& stage : stages) validate_stage(stage, n_qubits);
  check_virtual_count(stages, n_qubits, kraus_cap);
  return KrausChannel(n_qubits, std::move(stages));
}

KrausChannel KrausChannel::identity(int n_qubits) {
  return from_kraus(n_qubits,
                    {Matrix::Identity(qubit_dim(n_qubits), qubit_dim(n_qubits))});
}

double KrausChannel::virtual_kraus_count() const {
  double count = 1.0;
  for (const KrausStage& stage : stages_) {
    count *= static_cast<double>(stage.ops.size());
  }
  return count;
}

std::vector<Matrix> KrausChannel::flattened(std::size_t kraus_cap) const {
  const double cap = static_cast<double>(resolve_cap(kraus_cap, n_qubits_));
  const double count = virtual_kraus_count();
  if (count > cap) {
    throw ResourceLimit("flattened Kraus list would have " +
                        std::to_string(count) + " operators, cap is " +
                        std::to_string(static_cast<std::size_t>(cap)));
  }
  const double d = static_cast<double>(dim());
  if (count * d * d > 128.0 * 1024.0 * 1024.0) {  // 2 GiB of complex doubles
    throw ResourceLimit("flattened Kraus list would not fit in memory");
  }
  std::vector<Matrix> acc = {Matrix::Identity(dim(), dim())};
  for (const KrausStage& stage : stages_) {
    std::vector<Matrix> lifted;
    lifted.reserve(stage.ops.size());
    for (const Matrix& op : stage.ops) {
      lifted.push_back(internal::lift_operator(op, stage.targets, n_qubits_));
    }
    std::vector<Matrix> next;
    next.reserve(acc.size() * lifted.size());
    for (const Matrix& l : lifted) {
      for (const Matrix& a : acc) next.push_back(l * a);
    }
    acc = std::move(next);
  }
  return acc;
}

DensityMatrix apply_channel(const KrausChannel& e, const DensityMatrix& rho) {
  if (e.n_qubits() != rho.n_qubits()) {
    throw DimensionMismatch("apply_channel: channel on " +
                            std::to_string(e.n_qubits()) + " qubits, state on " +
                            std::to_string(rho.n_qubits()));
  }
  Matrix m = rho.matrix();
  for (const KrausStage& stage : e.stages()) {
    m = stage_forward(stage, m, e.n_qubits());
  }
  return DensityMatrix(e.n_qubits(), hermitize(m));
}

HermitianMatrix dual_apply(const KrausChannel& e, const HermitianMatrix& m) {
  if (e.dim() != m.dim()) {
    throw DimensionMismatch("dual_apply: channel dim " +
                            std::to_string(e.dim()) + ", matrix dim " +
                            std::to_string(m.dim()));
  }
  Matrix out = m.matrix();
  const auto& stages = e.stages();
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    out = stage_dual(*it, out, e.n_qubits());
  }
  return hermitize(out);
}

KrausChannel compose_channels(const KrausChannel& second,
                              const KrausChannel& first,
                              std::size_t kraus_cap) {
  if (second.n_qubits() != first.n_qubits()) {
    throw DimensionMismatch("compose_channels: qubit counts differ");
  }
  std::vector<KrausStage> stages = first.stages();
  stages.insert(stages.end(), second.stages().begin(), second.stages().end());
  return KrausChannel::from_stages(first.n_qubits(), std::move(stages),
                                   kraus_cap);
}

KrausChannel tensor_channels(const KrausChannel& a, const KrausChannel& b) {
  const int n = a.n_qubits() + b.n_qubits();
  std::vector<KrausStage> stages = a.stages();
  for (KrausStage stage : b.stages()) {
    for (int& t : stage.targets) t += a.n_qubits();
    stages.push_back(std::move(stage));
  }
  return KrausChannel::from_stages(n, std::move(stages),
                                   std::numeric_limits<std::size_t>::max());
}

std::string_view noise_kind_name(NoiseKind kind) {
  switch (kind) {
    case NoiseKind::BitFlip: return "bit_flip";
    case NoiseKind::PhaseFlip: return "phase_flip";
    case NoiseKind::BitPhaseFlip: return "bit_phase_flip";
    case NoiseKind::Depolarizing: return "depolarizing";
  }
  throw InvalidInput("unhandled noise kind");
}

namespace {

KrausStage noise_stage(NoiseKind kind, double p, int target) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidProbability("noise probability " + std::to_string(p) +
                             " outside [0, 1]");
  }
  const Matrix id = Matrix::Identity(2, 2);
  const Matrix x = gate_matrix({Gate::X, {}, {0}});
  const Matrix y = gate_matrix({Gate::Y, {}, {0}});
  const Matrix z = gate_matrix({Gate::Z, {}, {0}});
  std::vector<Matrix> ops;
  if (kind == NoiseKind::Depolarizing) {
    ops = {std::sqrt(1.0 - p) * id, std::sqrt(p / 3.0) * x,
           std::sqrt(p / 3.0) * y, std::sqrt(p / 3.0) * z};
  } else {
    const Matrix& u = kind == NoiseKind::BitFlip    ? x
                      : kind == NoiseKind::PhaseFlip ? z
                                                     : y;
    ops = {std::sqrt(1.0 - p) * id, std::sqrt(p) * u};
  }
  return KrausStage{{target}, std::move(ops)};
}

}  // namespace

KrausChannel noise_channel(NoiseKind kind, double p, int target, int n_qubits) {
  return KrausChannel::from_stages(n_qubits, {noise_stage(kind, p, target)});
}

KrausChannel circuit_to_channel(const Circuit& c, const NoiseInjection& noise,
                                std::size_t kraus_cap) {
  validate_circuit(c);
  if (noise.placement != NoisePlacement::None &&
      !(noise.p >= 0.0 && noise.p <= 1.0)) {
    throw InvalidProbability("noise probability outside [0, 1]");
  }
  std::vector<KrausStage> stages;

  if (noise.placement == NoisePlacement::AfterEachGateOnTouchedQubits) {
    for (const GateSpec& g : c.gates) {
      stages.push_back(KrausStage{g.targets, {gate_matrix(g)}});
      std::vector<int> touched = g.targets;
      std::sort(touched.begin(), touched.end());
      for (int q : touched) {
        stages.push_back(noise_stage(noise.kind, noise.p, q));
      }
    }
    if (stages.empty()) {
      stages.push_back(
          KrausStage{all_qubits(c.n_qubits),
                     {Matrix::Identity(qubit_dim(c.n_qubits),
                                       qubit_dim(c.n_qubits))}});
    }
    return KrausChannel::from_stages(c.n_qubits, std::move(stages), kraus_cap);
  }

  // The noiseless part collapses to the dense circuit unitary.
  stages.push_back(KrausStage{all_qubits(c.n_qubits), {circuit_unitary(c)}});
  if (noise.placement == NoisePlacement::OncePerQubitAtEnd) {
    for (int q = 0; q < c.n_qubits; ++q) {
      stages.push_back(noise_stage(noise.kind, noise.p, q));
    }
  }
  return KrausChannel::from_stages(c.n_qubits, std::move(stages), kraus_cap);
}

}  // namespace qdpv
