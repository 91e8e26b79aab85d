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

#include "qdpv/serialize.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace qdpv::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw ParseError(message);
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

int require_int(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer()) fail(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double require_double(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) fail(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

json finite_or_inf(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

json subset_report_to_json(const SubsetReport& r) {
  return json{{"subset", r.subset},
              {"lambda_max", r.lambda_max},
              {"lambda_min", r.lambda_min},
              {"delta_s", r.delta_s},
              {"kappa", finite_or_inf(r.kappa)}};
}

GateSpec gate_from_json(const json& j) {
  const std::string name = require_string(j, "name");
  const std::optional<Gate> gate = gate_from_name(name);
  if (!gate) throw UnknownGate("unknown gate name '" + name + "'");
  GateSpec spec;
  spec.gate = *gate;
  if (j.contains("params")) {
    if (!j["params"].is_array()) fail("gate 'params' must be an array");
    for (const json& p : j["params"]) spec.params.push_back(p.get<double>());
  }
  const json& targets = require(j, "targets");
  if (!targets.is_array()) fail("gate 'targets' must be an array");
  for (const json& t : targets) spec.targets.push_back(t.get<int>());
  return spec;
}

json gate_to_json(const GateSpec& g) {
  json j{{"name", std::string(gate_name(g.gate))}, {"targets", g.targets}};
  if (!g.params.empty()) j["params"] = g.params;
  return j;
}

}  // namespace

nlohmann::json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) fail("matrix must be a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail("matrix rows must all have the same length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array() || entry.size() != 2) {
        fail("matrix entries must be [re, im] pairs");
      }
      m(r, c) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
  }
  return m;
}

NoiseKind noise_kind_from_name(const std::string& name) {
  if (name == "bit_flip") return NoiseKind::BitFlip;
  if (name == "phase_flip") return NoiseKind::PhaseFlip;
  if (name == "bit_phase_flip") return NoiseKind::BitPhaseFlip;
  if (name == "depolarizing") return NoiseKind::Depolarizing;
  throw InvalidInput("unknown noise kind '" + name + "'");
}

std::string_view noise_placement_name(NoisePlacement placement) {
  switch (placement) {
    case NoisePlacement::None: return "none";
    case NoisePlacement::AfterEachGateOnTouchedQubits:
      return "after_each_gate_on_touched_qubits";
    case NoisePlacement::OncePerQubitAtEnd: return "once_per_qubit_at_end";
  }
  throw InvalidInput("unhandled noise placement");
}

NoisePlacement noise_placement_from_name(const std::string& name) {
  if (name == "none") return NoisePlacement::None;
  if (name == "after_each_gate_on_touched_qubits") {
    return NoisePlacement::AfterEachGateOnTouchedQubits;
  }
  if (name == "once_per_qubit_at_end") return NoisePlacement::OncePerQubitAtEnd;
  throw InvalidInput("unknown noise placement '" + name + "'");
}

Povm AlgorithmSpec::build_povm(std::size_t max_outcomes) const {
  if (measurement.type == MeasurementSpec::Type::Computational) {
    if (measurement.qubits.empty()) {
      throw InvalidInput("computational measurement needs at least one qubit");
    }
    if (measurement.qubits.size() < 64 &&
        (std::size_t{1} << measurement.qubits.size()) > max_outcomes) {
      throw ResourceLimit(
          "computational measurement on " +
          std::to_string(measurement.qubits.size()) + " qubits exceeds the " +
          std::to_string(max_outcomes) + "-outcome cap");
    }
    return Povm::computational(n_qubits, measurement.qubits);
  }
  std::vector<std::string> labels = measurement.labels;
  if (labels.empty()) {
    for (std::size_t k = 0; k < measurement.elements.size(); ++k) {
      labels.push_back(std::to_string(k));
    }
  }
  if (measurement.elements.size() > max_outcomes) {
    throw ResourceLimit("explicit measurement exceeds the outcome cap");
  }
  std::vector<HermitianMatrix> elements;
  elements.reserve(measurement.elements.size());
  for (const Matrix& m : measurement.elements) elements.push_back(hermitize(m));
  return Povm(n_qubits, std::move(labels), std::move(elements));
}

KrausChannel AlgorithmSpec::build_channel(std::size_t kraus_cap) const {
  if (circuit.has_value() == kraus_stages.has_value()) {
    throw InvalidInput(
        "algorithm must have exactly one of 'gates' or 'kraus_stages'");
  }
  if (circuit) {
    return circuit_to_channel(*circuit, noise, kraus_cap);
  }
  return KrausChannel::from_stages(n_qubits, *kraus_stages, kraus_cap);
}

QuantumAlgorithm AlgorithmSpec::build(std::size_t max_outcomes,
                                      std::size_t kraus_cap) const {
  return QuantumAlgorithm(build_channel(kraus_cap), build_povm(max_outcomes));
}

nlohmann::json algorithm_to_json(const AlgorithmSpec& spec) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n_qubits"] = spec.n_qubits;
  if (spec.circuit) {
    json gates = json::array();
    for (const GateSpec& g : spec.circuit->gates) gates.push_back(gate_to_json(g));
    j["gates"] = std::move(gates);
    if (spec.noise.placement != NoisePlacement::None) {
      j["noise"] = json{{"kind", std::string(noise_kind_name(spec.noise.kind))},
                        {"p", spec.noise.p},
                        {"placement",
                         std::string(noise_placement_name(spec.noise.placement))}};
    }
  }
  if (spec.kraus_stages) {
    json stages = json::array();
    for (const KrausStage& stage : *spec.kraus_stages) {
      json ops = json::array();
      for (const Matrix& op : stage.ops) ops.push_back(matrix_to_json(op));
      stages.push_back(json{{"targets", stage.targets}, {"operators", std::move(ops)}});
    }
    j["kraus_stages"] = std::move(stages);
  }
  json measurement;
  if (spec.measurement.type == MeasurementSpec::Type::Computational) {
    measurement = json{{"type", "computational"},
                       {"qubits", spec.measurement.qubits}};
  } else {
    json elements = json::array();
    for (const Matrix& m : spec.measurement.elements) {
      elements.push_back(matrix_to_json(m));
    }
    measurement = json{{"type", "explicit"}, {"elements", std::move(elements)}};
    if (!spec.measurement.labels.empty()) {
      measurement["labels"] = spec.measurement.labels;
    }
  }
  j["measurement"] = std::move(measurement);
  return j;
}

AlgorithmSpec algorithm_from_json(const nlohmann::json& j) {
  AlgorithmSpec spec;
  const std::string version = require_string(j, "schema_version");
  if (version != kSchemaVersion) {
    fail("unsupported schema_version '" + version + "'");
  }
  spec.n_qubits = require_int(j, "n_qubits");
  qubit_dim(spec.n_qubits);

  if (j.contains("gates")) {
    Circuit c;
    c.n_qubits = spec.n_qubits;
    const json& gates = j["gates"];
    if (!gates.is_array()) fail("'gates' must be an array");
    for (const json& g : gates) c.gates.push_back(gate_from_json(g));
    spec.circuit = std::move(c);
    if (j.contains("noise")) {
      const json& noise = j["noise"];
      spec.noise.kind = noise_kind_from_name(require_string(noise, "kind"));
      spec.noise.p = require_double(noise, "p");
      spec.noise.placement =
          noise_placement_from_name(require_string(noise, "placement"));
    }
  }
  if (j.contains("kraus_stages")) {
    const json& stages = j["kraus_stages"];
    if (!stages.is_array() || stages.empty()) {
      fail("'kraus_stages' must be a nonempty array");
    }
    std::vector<KrausStage> parsed;
    for (const json& stage : stages) {
      KrausStage s;
      const json& targets = require(stage, "targets");
      for (const json& t : targets) s.targets.push_back(t.get<int>());
      const json& ops = require(stage, "operators");
      if (!ops.is_array() || ops.empty()) fail("stage 'operators' must be nonempty");
      for (const json& op : ops) s.ops.push_back(matrix_from_json(op));
      parsed.push_back(std::move(s));
    }
    spec.kraus_stages = std::move(parsed);
  }

  const json& measurement = require(j, "measurement");
  const std::string type = require_string(measurement, "type");
  if (type == "computational") {
    spec.measurement.type = MeasurementSpec::Type::Computational;
    const json& qubits = require(measurement, "qubits");
    for (const json& q : qubits) spec.measurement.qubits.push_back(q.get<int>());
  } else if (type == "explicit") {
    spec.measurement.type = MeasurementSpec::Type::Explicit;
    const json& elements = require(measurement, "elements");
    if (!elements.is_array() || elements.empty()) {
      fail("explicit measurement needs at least one element");
    }
    for (const json& m : elements) {
      spec.measurement.elements.push_back(matrix_from_json(m));
    }
    if (measurement.contains("labels")) {
      for (const json& label : measurement["labels"]) {
        spec.measurement.labels.push_back(label.get<std::string>());
      }
    }
  } else {
    fail("measurement type must be 'computational' or 'explicit'");
  }
  return spec;
}

AlgorithmSpec load_algorithm_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("invalid JSON in '" + path + "': " + e.what());
  }
  return algorithm_from_json(j);
}

void save_algorithm_file(const AlgorithmSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail("cannot write '" + path + "'");
  out << algorithm_to_json(spec).dump(2) << "\n";
}

nlohmann::json report_to_json(
    const std::string& command, const std::optional<DpParams>& params,
    const Verdict& verdict,
    const std::vector<std::pair<double, double>>& eps_star_table,
    const Provenance& provenance) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  if (params) {
    j["params"] = json{{"epsilon", params->epsilon},
                       {"delta", params->delta},
                       {"eta", params->eta}};
  }
  j["private"] = verdict.is_private;
  j["delta_star"] = verdict.delta_star;
  j["kappa_star"] = finite_or_inf(verdict.kappa_star);
  j["eps_star"] = finite_or_inf(verdict.eps_star);
  json table = json::array();
  for (const auto& [eta, eps] : eps_star_table) {
    table.push_back(json{{"eta", eta}, {"eps_star", finite_or_inf(eps)}});
  }
  j["eps_star_table"] = std::move(table);
  if (verdict.witness) {
    const Counterexample& w = *verdict.witness;
    j["witness"] = json{{"subset", w.witness_subset},
                        {"violation_amount", w.violation_amount},
                        {"eta_used", w.eta_used},
                        {"gamma", matrix_to_json(w.gamma.matrix())},
                        {"phi", matrix_to_json(w.phi.matrix())}};
  }
  json per_subset = json::array();
  const std::size_t limit = std::min<std::size_t>(verdict.per_subset.size(), 32);
  for (std::size_t i = 0; i < limit; ++i) {
    per_subset.push_back(subset_report_to_json(verdict.per_subset[i]));
  }
  j["per_subset"] = std::move(per_subset);
  j["provenance"] = json{{"input_digest", provenance.input_digest},
                         {"seed", provenance.seed},
                         {"tool_version", provenance.tool_version},
                         {"wall_time_s", provenance.wall_time_s}};
  return j;
}

Counterexample counterexample_from_report(const nlohmann::json& report,
                                          int n_qubits) {
  const json& w = require(report, "witness");
  std::vector<std::string> subset;
  for (const json& label : require(w, "subset")) {
    subset.push_back(label.get<std::string>());
  }
  return Counterexample{
      DensityMatrix(n_qubits, hermitize(matrix_from_json(require(w, "gamma")))),
      DensityMatrix(n_qubits, hermitize(matrix_from_json(require(w, "phi")))),
      std::move(subset),
      require_double(w, "violation_amount"),
      require_double(w, "eta_used"),
  };
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex << hash;
  return out.str();
}

}  // namespace qdpv::io
