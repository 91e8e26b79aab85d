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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdpv/oracle.hpp"

namespace qdpv::io {

inline constexpr std::string_view kSchemaVersion = "1";
inline constexpr std::string_view kToolVersion = "0.1.0";

// ---------------------------------------------------------------------------
// Algorithm files
// ---------------------------------------------------------------------------

struct MeasurementSpec {
  enum class Type { Computational, Explicit };
  Type type = Type::Computational;
  std::vector<int> qubits;          // computational: measured qubits
  std::vector<Matrix> elements;     // explicit: dense POVM elements
  std::vector<std::string> labels;  // explicit: optional outcome labels
};

/// The on-disk description of a quantum algorithm: either a gate circuit
/// with a noise-injection policy, or an explicit staged Kraus channel,
/// followed by a measurement.
struct AlgorithmSpec {
  int n_qubits = 1;
  std::optional<Circuit> circuit;
  NoiseInjection noise;  // meaningful for the circuit form only
  std::optional<std::vector<KrausStage>> kraus_stages;
  MeasurementSpec measurement;

  Povm build_povm(std::size_t max_outcomes) const;
  KrausChannel build_channel(std::size_t kraus_cap = 0) const;
  QuantumAlgorithm build(std::size_t max_outcomes = 16,
                         std::size_t kraus_cap = 0) const;
};

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json algorithm_to_json(const AlgorithmSpec& spec);
AlgorithmSpec algorithm_from_json(const nlohmann::json& j);

AlgorithmSpec load_algorithm_file(const std::string& path);
void save_algorithm_file(const AlgorithmSpec& spec, const std::string& path);

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Provenance {
  std::string input_digest;
  std::uint64_t seed = 0;
  std::string tool_version{kToolVersion};
  double wall_time_s = 0.0;
};

/// Serialized verdict; per-subset reports are truncated to the top 32 by
/// delta_S. Infinities are encoded as the string "inf".
nlohmann::json report_to_json(const std::string& command,
                              const std::optional<DpParams>& params,
                              const Verdict& verdict,
                              const std::vector<std::pair<double, double>>&
                                  eps_star_table,
                              const Provenance& provenance);

/// Rebuilds the witness of a verdict report for replay.
Counterexample counterexample_from_report(const nlohmann::json& report,
                                          int n_qubits);

/// FNV-1a 64-bit digest of a byte string, hex encoded.
std::string fnv1a64_hex(std::string_view bytes);

/// Parse helpers shared with the CLI.
NoiseKind noise_kind_from_name(const std::string& name);
std::string_view noise_placement_name(NoisePlacement placement);
NoisePlacement noise_placement_from_name(const std::string& name);

}  // namespace qdpv::io
