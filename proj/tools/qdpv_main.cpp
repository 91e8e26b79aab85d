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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdpv/serialize.hpp"

namespace {

using namespace qdpv;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

std::string format_value(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CommonArgs {
  std::string input;
  std::string out;
  std::size_t subset_cap = 16;
  std::size_t kraus_cap = 0;  // 0 = default 4^n
  std::string noise_kind;
  double noise_p = 0.0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("input", args.input, "algorithm file (JSON)")->required();
  cmd->add_option("--out", args.out, "report output path");
  cmd->add_option("--subset-cap", args.subset_cap,
                  "max outcome count for subset enumeration (default 16)");
  cmd->add_option("--kraus-cap", args.kraus_cap,
                  "max virtual Kraus operator count (default 4^n)");
  auto* noise = cmd->add_option("--noise", args.noise_kind,
                                "override noise kind (depolarizing, bit_flip, "
                                "phase_flip, bit_phase_flip)");
  auto* p = cmd->add_option("--p", args.noise_p, "override noise probability");
  noise->needs(p);
  p->needs(noise);
}

QuantumAlgorithm build_algorithm(const CommonArgs& args,
                                 io::AlgorithmSpec& spec) {
  if (!args.noise_kind.empty()) {
    if (!spec.circuit) {
      throw InvalidInput("--noise override applies to circuit files only");
    }
    spec.noise.kind = io::noise_kind_from_name(args.noise_kind);
    spec.noise.p = args.noise_p;
    if (spec.noise.placement == NoisePlacement::None) {
      spec.noise.placement = NoisePlacement::OncePerQubitAtEnd;
    }
  }
  return spec.build(args.subset_cap, args.kraus_cap);
}

std::vector<std::pair<double, double>> default_eps_table(double kappa_star) {
  std::vector<std::pair<double, double>> table;
  for (int i = 1; i <= 10; ++i) {
    const double eta = static_cast<double>(i) / 10.0;
    table.emplace_back(eta, optimal_epsilon(kappa_star, eta));
  }
  return table;
}

void write_report(const std::string& path, const json& report) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << report.dump(2) << "\n";
}

int run_verify(const CommonArgs& args, double eps, double delta, double eta,
               bool cross_check, int oracle_trials, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string bytes = read_file_bytes(args.input);
  io::AlgorithmSpec spec = io::load_algorithm_file(args.input);
  const QuantumAlgorithm algo = build_algorithm(args, spec);
  const DpParams params{eps, delta, eta};
  const VerifyOptions options{args.subset_cap};
  const Verdict verdict = verify_dp(algo, params, options);

  std::cout << "private: " << (verdict.is_private ? "true" : "false") << "\n"
            << "delta_star: " << format_value(verdict.delta_star) << "\n"
            << "kappa_star: " << format_value(verdict.kappa_star) << "\n";
  if (verdict.witness) {
    const Counterexample& w = *verdict.witness;
    std::cout << "witness_subset: " << join_labels(w.witness_subset) << "\n"
              << "violation_amount: " << format_value(w.violation_amount)
              << "\n"
              << "witness_distance: "
              << format_value(trace_distance(w.gamma, w.phi)) << "\n";
  }

  if (cross_check) {
    SearchStats stats;
    const std::optional<ViolationWitness> found = violation_search(
        algo, params, oracle_trials, seed, SearchOptions{}, &stats);
    const bool agree = found.has_value() == !verdict.is_private;
    std::cout << "cross_check: " << (agree ? "agree" : "DISAGREE")
              << " (sampled_gap " << format_value(stats.best_gap) << ", trials "
              << stats.trials_run << ")\n";
    if (!agree) {
      throw Error("CrossCheckMismatch",
                  "oracle search disagrees with the verifier verdict");
    }
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const io::Provenance prov{"fnv1a64:" + io::fnv1a64_hex(bytes), seed,
                            std::string(io::kToolVersion), wall};
  write_report(args.out,
               io::report_to_json("verify", params, verdict,
                                  default_eps_table(verdict.kappa_star), prov));
  return verdict.is_private ? kExitOk : kExitViolation;
}

int run_kappa(const CommonArgs& args, double eta, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::string bytes = read_file_bytes(args.input);
  io::AlgorithmSpec spec = io::load_algorithm_file(args.input);
  const QuantumAlgorithm algo = build_algorithm(args, spec);
  const VerifyOptions options{args.subset_cap};
  KappaReport report = max_condition_number(algo, eta, options);

  std::cout << "kappa_star: " << format_value(report.kappa_star) << "\n"
            << "argmax_subset: " << join_labels(report.best.subset) << "\n"
            << "eps_star(eta=" << format_value(eta)
            << "): " << format_value(optimal_epsilon(report.kappa_star, eta))
            << "\n";

  // Present the scan through the common report shape; the witness is the
  // extremal pair of the argmax subset, violating only when kappa* > 1.
  Verdict verdict{report.kappa_star <= 1.0 + 1e-9,
                  0.0,
                  report.kappa_star,
                  optimal_epsilon(report.kappa_star, eta),
                  std::move(report.witness),
                  std::move(report.per_subset)};
  for (const SubsetReport& r : verdict.per_subset) {
    verdict.delta_star = std::max(verdict.delta_star, r.delta_s);
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  const io::Provenance prov{"fnv1a64:" + io::fnv1a64_hex(bytes), seed,
                            std::string(io::kToolVersion), wall};
  write_report(args.out,
               io::report_to_json("kappa", std::nullopt, verdict,
                                  default_eps_table(report.kappa_star), prov));
  return kExitOk;
}

int run_curve(const CommonArgs& args, int points,
              const std::vector<double>& explicit_etas) {
  io::AlgorithmSpec spec = io::load_algorithm_file(args.input);
  const QuantumAlgorithm algo = build_algorithm(args, spec);
  std::vector<double> etas = explicit_etas;
  if (etas.empty()) {
    if (points < 1) throw InvalidInput("--points must be >= 1");
    for (int i = 1; i <= points; ++i) {
      etas.push_back(static_cast<double>(i) / points);
    }
  }
  const VerifyOptions options{args.subset_cap};
  const auto curve = epsilon_curve(algo, etas, options);

  std::ostringstream out;
  out << "eta,eps_star\n";
  for (const auto& [curve_eta, eps_star] : curve) {
    out << format_value(curve_eta) << "," << format_value(eps_star) << "\n";
  }
  if (args.out.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(args.out);
    if (!file) throw ParseError("cannot write '" + args.out + "'");
    file << out.str();
  }
  return kExitOk;
}

int run_compose(const std::string& input_a, const std::string& input_b,
                const std::vector<std::string>& subset_a,
                const std::vector<std::string>& subset_b,
                const std::string& out_path, std::size_t subset_cap) {
  io::AlgorithmSpec spec_a = io::load_algorithm_file(input_a);
  io::AlgorithmSpec spec_b = io::load_algorithm_file(input_b);
  const QuantumAlgorithm a = spec_a.build(subset_cap);
  const QuantumAlgorithm b = spec_b.build(subset_cap);
  const QuantumAlgorithm composite = compose_parallel(a, subset_a, b, subset_b);

  io::AlgorithmSpec out;
  out.n_qubits = composite.n_qubits();
  out.kraus_stages = composite.channel().stages();
  out.measurement.type = io::MeasurementSpec::Type::Explicit;
  for (std::size_t k = 0; k < composite.povm().size(); ++k) {
    out.measurement.elements.push_back(composite.povm().element(k).matrix());
  }
  out.measurement.labels = composite.povm().labels();
  io::save_algorithm_file(out, out_path);
  std::cout << "composed: " << composite.n_qubits() << " qubits, "
            << composite.povm().size() << " outcomes -> " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact differential-privacy verification for noisy quantum "
               "algorithms (Kraus channel + POVM), with counterexamples"};
  app.require_subcommand(1);

  CommonArgs verify_args;
  double eps = 0.0, delta = 0.0, eta = 1.0;
  bool cross_check = false;
  int oracle_trials = 10000;
  std::uint64_t seed = 0;
  CLI::App* verify = app.add_subcommand(
      "verify", "decide (eps,delta)-differential privacy within eta");
  add_common(verify, verify_args);
  verify->add_option("--eps", eps, "epsilon >= 0")->required();
  verify->add_option("--delta", delta, "delta in [0,1]")->required();
  verify->add_option("--eta", eta, "eta in (0,1]")->required();
  verify->add_flag("--cross-check", cross_check,
                   "replay the verdict through the sampling oracle");
  verify->add_option("--oracle-trials", oracle_trials,
                     "trials for --cross-check (default 10000)");
  verify->add_option("--seed", seed, "seed for --cross-check sampling");

  CommonArgs kappa_args;
  double kappa_eta = 1.0;
  std::uint64_t kappa_seed = 0;
  CLI::App* kappa = app.add_subcommand(
      "kappa", "maximum condition number kappa* and the extremal state pair");
  add_common(kappa, kappa_args);
  kappa->add_option("--eta", kappa_eta,
                    "eta used to mix the witness pair (default 1)");
  kappa->add_option("--seed", kappa_seed, "recorded in provenance");

  CommonArgs curve_args;
  int curve_points = 50;
  std::vector<double> curve_etas;
  CLI::App* curve = app.add_subcommand(
      "curve", "optimal bound eps*(eta) as CSV over an eta grid");
  add_common(curve, curve_args);
  curve->add_option("--points", curve_points,
                    "uniform grid size on (0,1] (default 50)");
  curve->add_option("--etas", curve_etas, "explicit eta values")
      ->delimiter(',');

  std::string compose_a, compose_b, compose_out;
  std::vector<std::string> subset_a, subset_b;
  std::size_t compose_cap = 16;
  CLI::App* compose = app.add_subcommand(
      "compose", "parallel composition of two algorithm files");
  compose->add_option("input_a", compose_a, "first algorithm file")->required();
  compose->add_option("input_b", compose_b, "second algorithm file")->required();
  compose->add_option("--subset-a", subset_a, "outcome labels of the first")
      ->delimiter(',')
      ->required();
  compose->add_option("--subset-b", subset_b, "outcome labels of the second")
      ->delimiter(',')
      ->required();
  compose->add_option("--out", compose_out, "composed file path")->required();
  compose->add_option("--subset-cap", compose_cap,
                      "max outcome count (default 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (verify->parsed()) {
      return run_verify(verify_args, eps, delta, eta, cross_check,
                        oracle_trials, seed);
    }
    if (kappa->parsed()) return run_kappa(kappa_args, kappa_eta, kappa_seed);
    if (curve->parsed()) return run_curve(curve_args, curve_points, curve_etas);
    if (compose->parsed()) {
      return run_compose(compose_a, compose_b, subset_a, subset_b, compose_out,
                         compose_cap);
    }
    return kExitError;
  } catch (const Error& e) {
    std::cout << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return kExitError;
  }
}
