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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any criterion fails.
//
// Usage: qdpv_acceptance <path-to-cli-binary> [fixtures-dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdpv/encoding.hpp"
#include "qdpv/serialize.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

using namespace qdpv;
using qdpv::testing::TestRng;
namespace fs = std::filesystem;

namespace {

std::string g_cli_path;
std::ostringstream g_detail;

#define ACCEPT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      g_detail << "failed: " #cond " (line " << __LINE__ << ") "; \
      return false;                                               \
    }                                                             \
  } while (0)

bool criterion1_golden_dual_maps() {
  const QuantumAlgorithm a = qdpv::testing::spread_algorithm();
  const auto w = subset_matrices(a);
  ACCEPT(w.size() == 2);
  ACCEPT((w[0].matrix() - Matrix::Identity(4, 4) / 3.0).cwiseAbs().maxCoeff() <=
         1e-10);
  ACCEPT((w[1].matrix() - 2.0 * Matrix::Identity(4, 4) / 3.0)
             .cwiseAbs()
             .maxCoeff() <= 1e-10);
  const KappaReport r = max_condition_number(a);
  ACCEPT(std::abs(r.kappa_star - 1.0) <= 1e-10);
  ACCEPT(std::abs(optimal_epsilon(r.kappa_star, 1.0)) <= 1e-10);
  return true;
}

bool criterion2_golden_violation() {
  const QuantumAlgorithm a = qdpv::testing::spread_merge_algorithm();
  const auto w = subset_matrices(a);
  const EigenExtremes ext = extremal_eigenpairs(w[0]);
  ACCEPT(std::abs(ext.lambda_max - 1.0 / 3.0) <= 1e-10);
  ACCEPT(ext.lambda_min <= 1e-9 * std::max(1.0, ext.lambda_max));
  ACCEPT(std::isinf(max_condition_number(a).kappa_star));

  const DpParams p{0.0, 0.0, 0.5};
  const Verdict v = verify_dp(a, p);
  ACCEPT(!v.is_private);
  ACCEPT(v.witness.has_value());
  ACCEPT(check_counterexample(a, *v.witness, p));

  Matrix gamma_expected = Matrix::Zero(4, 4);
  gamma_expected(0, 0) = 0.5;
  gamma_expected(1, 1) = 0.5;
  Matrix phi_expected = Matrix::Zero(4, 4);
  phi_expected(1, 1) = 1.0;
  ACCEPT(trace_distance(v.witness->gamma,
                        DensityMatrix(2, HermitianMatrix(gamma_expected))) <=
         1e-8);
  ACCEPT(trace_distance(v.witness->phi,
                        DensityMatrix(2, HermitianMatrix(phi_expected))) <=
         1e-8);
  return true;
}

bool criterion3_oracle_agreement() {
  int disagreements = 0;
  double worst_overshoot = -1.0;
  double worst_attainment = -1.0;
  for (int i = 0; i < 100; ++i) {
    TestRng rng(1000 + static_cast<std::uint64_t>(i));
    const QuantumAlgorithm a = qdpv::testing::random_algorithm(
        2, 2 + (i % 3), 1 + (i % 4), rng);
    const double eta = rng.uniform(0.2, 1.0);
    const double eps = rng.uniform(0.0, 0.7);
    const double delta_star = verify_dp(a, DpParams{eps, 0.0, eta}).delta_star;
    const double delta = (i % 2 == 0 || delta_star < 1e-6)
                             ? std::min(1.0, delta_star + 0.05)
                             : std::max(0.0, delta_star - 0.05);
    const DpParams p{eps, delta, eta};
    const Verdict v = verify_dp(a, p);
    const auto witness = violation_search(a, p, 10000,
                                          static_cast<std::uint64_t>(i));
    if (witness.has_value() != !v.is_private) ++disagreements;
    // Gap statistics over a full sweep (delta = 1 never exits early; the
    // sampled gap itself does not depend on delta).
    SearchStats stats;
    violation_search(a, DpParams{eps, 1.0, eta}, 10000,
                     static_cast<std::uint64_t>(i), SearchOptions{}, &stats);
    worst_overshoot = std::max(worst_overshoot, stats.best_gap - v.delta_star);
    worst_attainment =
        std::max(worst_attainment, v.delta_star - stats.best_gap);
  }
  g_detail << "disagreements=" << disagreements
           << " max_gap_overshoot=" << worst_overshoot
           << " max_attainment_gap=" << worst_attainment << " ";
  ACCEPT(disagreements == 0);
  ACCEPT(worst_overshoot <= 1e-8);
  ACCEPT(worst_attainment <= 1e-6);
  return true;
}

bool criterion4_spectrum_squeeze() {
  TestRng rng(4242);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + (i % 3);
    const Eigen::Index dim = qubit_dim(n);
    const KrausChannel e = qdpv::testing::random_channel(n, 1 + (i % 4), rng);
    const HermitianMatrix m = qdpv::testing::random_psd(dim, rng);
    const Eigen::VectorXd before = eigenvalues(m);
    const Eigen::VectorXd after = eigenvalues(dual_apply(e, m));
    ACCEPT(before(0) <= after(0) + 1e-8);
    ACCEPT(after(0) <= after(after.size() - 1) + 1e-8);
    ACCEPT(after(after.size() - 1) <= before(before.size() - 1) + 1e-8);
  }
  return true;
}

double kappa_for_noise(const Circuit& c, NoiseKind kind, double p) {
  const KrausChannel channel = circuit_to_channel(
      c, NoiseInjection{kind, p, NoisePlacement::OncePerQubitAtEnd});
  const QuantumAlgorithm a(channel, Povm::computational(c.n_qubits, {0, 1}));
  return max_condition_number(a).kappa_star;
}

bool criterion5_noise_monotonicity() {
  for (int i = 0; i < 5; ++i) {
    TestRng rng(500 + static_cast<std::uint64_t>(i));
    const int n = 4 + (i % 3);
    const Circuit c = qdpv::testing::random_circuit(n, 8, rng);
    for (NoiseKind kind : {NoiseKind::Depolarizing, NoiseKind::BitFlip}) {
      const double strong = kappa_for_noise(c, kind, 0.01);
      const double weak = kappa_for_noise(c, kind, 0.001);
      ACCEPT(std::isfinite(strong));
      ACCEPT(std::isfinite(weak));
      ACCEPT(strong < weak);
    }
  }
  return true;
}

bool criterion6_curve_shape() {
  std::vector<QuantumAlgorithm> fixtures;
  fixtures.push_back(qdpv::testing::hadamard_bitflip_algorithm());
  {
    TestRng rng(600);
    const Circuit c = qdpv::testing::random_circuit(4, 8, rng);
    fixtures.emplace_back(
        circuit_to_channel(c, NoiseInjection{NoiseKind::Depolarizing, 0.05,
                                             NoisePlacement::OncePerQubitAtEnd}),
        Povm::computational(4, {0, 1}));
  }
  std::vector<double> etas;
  for (int i = 1; i <= 50; ++i) etas.push_back(i / 50.0);
  for (const QuantumAlgorithm& a : fixtures) {
    const double kappa_star = max_condition_number(a).kappa_star;
    ACCEPT(std::isfinite(kappa_star));
    ACCEPT(kappa_star > 1.0);
    const auto curve = epsilon_curve(a, etas);
    for (std::size_t i = 1; i < curve.size(); ++i) {
      ACCEPT(curve[i].second > curve[i - 1].second);
    }
    for (std::size_t i = 2; i < curve.size(); ++i) {
      const double d2 = (curve[i].second - curve[i - 1].second) -
                        (curve[i - 1].second - curve[i - 2].second);
      ACCEPT(d2 <= 1e-9);
    }
  }
  return true;
}

bool criterion7_composition() {
  for (int i = 0; i < 50; ++i) {
    TestRng rng(700 + static_cast<std::uint64_t>(i));
    const QuantumAlgorithm a1 =
        qdpv::testing::random_algorithm(1, 2, 2 + (i % 3), rng);
    const QuantumAlgorithm a2 =
        qdpv::testing::random_algorithm(1, 2, 2 + ((i + 1) % 3), rng);
    const double eta1 = rng.uniform(0.3, 1.0);
    const double eta2 = rng.uniform(0.3, 1.0);
    auto pick_subset = [&](const QuantumAlgorithm& a) {
      std::vector<std::string> subset;
      for (const std::string& label : a.povm().labels()) {
        if (rng.uniform() < 0.5) subset.push_back(label);
      }
      if (subset.empty()) subset.push_back(a.povm().labels().front());
      return subset;
    };
    const std::vector<std::string> s1 = pick_subset(a1);
    const std::vector<std::string> s2 = pick_subset(a2);
    const QuantumAlgorithm composite = compose_parallel(a1, s1, a2, s2);

    // Composition transfer (eps-only): components at their optimal bounds imply
    // the composite at the summed bound within the product neighborhood.
    const double eps1 = optimal_epsilon(
        max_condition_number(a1, eta1).kappa_star, eta1);
    const double eps2 = optimal_epsilon(
        max_condition_number(a2, eta2).kappa_star, eta2);
    if (std::isfinite(eps1) && std::isfinite(eps2)) {
      ACCEPT(verify_eps_dp(a1, eps1 + 1e-12, eta1).is_private);
      ACCEPT(verify_eps_dp(a2, eps2 + 1e-12, eta2).is_private);
      ACCEPT(verify_eps_dp(composite, eps1 + eps2 + 1e-9, eta1 * eta2)
                 .is_private);
    }

    // Composition transfer ((eps, delta)): tight component deltas.
    const double eps_a = rng.uniform(0.0, 0.5);
    const double eps_b = rng.uniform(0.0, 0.5);
    const double d1 = verify_dp(a1, DpParams{eps_a, 1.0, eta1}).delta_star;
    const double d2 = verify_dp(a2, DpParams{eps_b, 1.0, eta2}).delta_star;
    ACCEPT(verify_dp(a1, DpParams{eps_a, std::min(1.0, d1), eta1}).is_private);
    ACCEPT(verify_dp(a2, DpParams{eps_b, std::min(1.0, d2), eta2}).is_private);
    ACCEPT(verify_dp(composite, DpParams{eps_a + eps_b, std::min(1.0, d1 + d2),
                                         eta1 * eta2})
               .is_private);
  }
  return true;
}

bool criterion8_encoding() {
  TestRng rng(800);
  // Binary neighbors under R_y (and R_x) hit sin(1/2) exactly.
  for (int i = 0; i < 20; ++i) {
    const int len = 1 + (i % 5);
    ClassicalVector v, w;
    const bool use_x = (i % 2) == 1;
    for (int j = 0; j < len; ++j) {
      const double bit = rng.uniform() < 0.5 ? 0.0 : 1.0;
      v.values.push_back(bit);
      w.values.push_back(bit);
      if (use_x) {
        v.axes.push_back(Axis::X);
        w.axes.push_back(Axis::X);
      }
    }
    const int j = rng.uniform_int(0, len - 1);
    w.values[static_cast<std::size_t>(j)] =
        1.0 - w.values[static_cast<std::size_t>(j)];
    const double d = encoded_neighbor_distance(v, w);
    ACCEPT(std::abs(d - std::sin(0.5)) <= 1e-10);
    ACCEPT(std::abs(trace_distance(angle_encode(v), angle_encode(w)) - d) <=
           1e-8);
  }
  // Formula agrees with the trace-distance oracle on random neighbors.
  for (int i = 0; i < 100; ++i) {
    const int len = 1 + (i % 3);
    ClassicalVector v, w;
    for (int j = 0; j < len; ++j) {
      const double value = rng.uniform(-6.0, 6.0);
      const Axis axis = rng.uniform() < 0.5 ? Axis::X : Axis::Y;
      v.values.push_back(value);
      w.values.push_back(value);
      v.axes.push_back(axis);
      w.axes.push_back(axis);
    }
    const int j = rng.uniform_int(0, len - 1);
    w.values[static_cast<std::size_t>(j)] += rng.uniform(0.1, 3.0);
    const double formula = encoded_neighbor_distance(v, w);
    const double oracle = trace_distance(angle_encode(v), angle_encode(w));
    ACCEPT(std::abs(formula - oracle) <= 1e-8);
  }
  return true;
}

bool criterion9_post_processing() {
  for (int i = 0; i < 100; ++i) {
    TestRng rng(900 + static_cast<std::uint64_t>(i));
    const int n = 1 + (i % 2);
    const Circuit c = qdpv::testing::random_circuit(n, 4, rng);
    const KrausChannel u = circuit_to_channel(
        c, NoiseInjection{NoiseKind::BitFlip, 0.0, NoisePlacement::None});
    const double floor = (i % 4 == 0) ? 0.0 : rng.uniform(0.05, 0.6);
    const Povm povm = qdpv::testing::random_povm(n, 2 + (i % 3), rng, floor);
    const KrausChannel f = qdpv::testing::random_channel(n, 1 + (i % 4), rng);

    const double before =
        max_condition_number(QuantumAlgorithm(u, povm)).kappa_star;
    const double after = max_condition_number(
                             QuantumAlgorithm(compose_channels(f, u), povm))
                             .kappa_star;
    if (std::isinf(before)) continue;  // inf bound holds trivially
    ACCEPT(after <= before + 1e-8);
  }
  return true;
}

bool criterion10_cli_performance() {
  TestRng rng(1010);
  const Circuit c = qdpv::testing::random_circuit(10, 10, rng);  // 20 gates
  io::AlgorithmSpec spec;
  spec.n_qubits = 10;
  spec.circuit = c;
  spec.noise = NoiseInjection{NoiseKind::Depolarizing, 0.01,
                              NoisePlacement::OncePerQubitAtEnd};
  spec.measurement.type = io::MeasurementSpec::Type::Computational;
  spec.measurement.qubits = {0, 1};

  const fs::path input = fs::temp_directory_path() / "qdpv_accept_10q.json";
  const fs::path report = fs::temp_directory_path() / "qdpv_accept_10q_report.json";
  io::save_algorithm_file(spec, input.string());

  const auto t0 = std::chrono::steady_clock::now();
  const std::string cmd = g_cli_path + " kappa " + input.string() + " --out " +
                          report.string() + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  g_detail << "wall=" << elapsed << "s ";
  ACCEPT(WEXITSTATUS(raw) == 0);
  ACCEPT(elapsed < 300.0);

  std::ifstream in(report);
  nlohmann::json j;
  in >> j;
  ACCEPT(j.at("kappa_star").is_number());
  ACCEPT(j.at("kappa_star").get<double>() > 1.0);
  fs::remove(input);
  fs::remove(report);
  return true;
}

struct Criterion {
  int number;
  const char* label;
  std::function<bool()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <cli-binary> [fixtures-dir]\n", argv[0]);
    return 2;
  }
  g_cli_path = argv[1];

  const std::vector<Criterion> criteria = {
      {1, "golden-dual-maps", criterion1_golden_dual_maps},
      {2, "golden-violation-witness", criterion2_golden_violation},
      {3, "oracle-agreement", criterion3_oracle_agreement},
      {4, "dual-spectrum-squeeze", criterion4_spectrum_squeeze},
      {5, "noise-monotonicity", criterion5_noise_monotonicity},
      {6, "eps-curve-shape", criterion6_curve_shape},
      {7, "parallel-composition", criterion7_composition},
      {8, "encoding-distance", criterion8_encoding},
      {9, "post-processing", criterion9_post_processing},
      {10, "cli-10-qubit-budget", criterion10_cli_performance},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    g_detail.str("");
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%s] %2d %-26s (%.2fs) %s%s\n", ok ? "PASS" : "FAIL",
                c.number, c.label, elapsed, g_detail.str().c_str(),
                error.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
