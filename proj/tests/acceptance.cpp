// Copyright 2026 The povmforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "povmforge/commands.hpp"
#include "povmforge/covariant.hpp"
#include "povmforge/detector.hpp"
#include "povmforge/su2.hpp"
#include "povmforge/unet.hpp"
#include "test_util.hpp"

using namespace povmforge;
using povmforge::testing::max_abs_diff;
using povmforge::testing::random_density;
using povmforge::testing::random_povm;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  std::vector<std::string> notes;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

// Criteria 1, 2, 4 and 7 run the CLI commands with their default configuration,
// so a plain `povmforge <command>` reproduces them.
struct CommandRun {
  int exit_code = -1;
  double seconds = 0.0;
  std::vector<std::vector<std::string>> rows;
  std::string trailer;
};

CommandRun run_command(int (*command)(const cli::RunConfig&, std::ostream&), const cli::RunConfig& config) {
  std::ostringstream out;
  CommandRun run;
  const auto start = std::chrono::steady_clock::now();
  run.exit_code = command(config, out);
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);  // header comment
  std::getline(in, line);  // column names
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      run.trailer = line;
      continue;
    }
    std::vector<std::string> cols;
    std::istringstream fields(line);
    for (std::string field; std::getline(fields, field, ',');) cols.push_back(field);
    run.rows.push_back(std::move(cols));
  }
  return run;
}

// Rows are (size, d, measured, theory, max_abs_err, d_from_epsilon).
double worst_scan_error(const CommandRun& run) {
  double worst = 0.0;
  for (const auto& row : run.rows) worst = std::max(worst, std::stod(row.at(4)));
  return worst;
}

Outcome fiurasek_scaling() {
  const CommandRun run = run_command(cli::cmd_fiurasek_scan, cli::RunConfig{});
  const double worst = worst_scan_error(run);
  return {run.exit_code == 0 && run.rows.size() == 6 && worst <= 1e-9 && run.seconds <= 60.0,
          fmt("N=1..6 x20, max |delta - 2/(N+1)| = %.2e, %.2f s (limit 60 s)", worst, run.seconds)};
}

Outcome covariant_scaling() {
  const CommandRun run = run_command(cli::cmd_covariant_scan, cli::RunConfig{});
  const double worst = worst_scan_error(run);
  return {run.exit_code == 0 && run.rows.size() == 9 && worst <= 1e-9 && run.seconds <= 10.0,
          fmt("twice_j=1..9 x20, max |delta - 2/(2j+1)| = %.2e, %.2f s (limit 10 s)", worst, run.seconds)};
}

Outcome clebsch_gordan_weights() {
  double worst = 0.0;
  for (int tj = 1; tj <= 12; ++tj) {
    const double up = su2::clebsch_gordan(1, 1, tj, tj, tj + 1, tj + 1);
    const double down = su2::clebsch_gordan(1, -1, tj, tj, tj + 1, tj - 1);
    worst = std::max(worst, std::abs(up * up - 1.0));
    worst = std::max(worst, std::abs(down * down - 1.0 / (tj + 1)));
  }
  return {worst <= 1e-10, fmt("j=1/2..6, max weight error %.2e (limit 1e-10)", worst)};
}

// Fraction of Haar-pure seeds of dimension 2j+1 whose untransposed program
// leaves a residual above `threshold`.
double negative_control_rate(su2::AngularMomentum j, int pairs, double threshold, Rng& rng) {
  int detected = 0;
  for (int k = 0; k < pairs; ++k) {
    const covariant::CovariantSeed seed(DensityState::pure(haar_state(j.dim(), rng)), covariant::spin_rep(j));
    if (covariant::bell_program_check(seed, su2::GroupElement::random(rng), covariant::TransposeMode::kOmitted) >
        threshold) {
      ++detected;
    }
  }
  return static_cast<double>(detected) / pairs;
}

Outcome exact_covariant_programmability() {
  cli::RunConfig config;
  config.negative_control = true;
  const CommandRun run = run_command(cli::cmd_exact_check, config);
  // Rows are (alpha, beta, gamma, nu_id, mode, residual, flag).
  double worst = 0.0;
  int pairs = 0, controls = 0, detected = 0;
  for (const auto& row : run.rows) {
    const double residual = std::stod(row.at(5));
    const bool generic = row.at(3).rfind("pure_", 0) == 0;
    if (row.at(4) == "transpose") {
      worst = std::max(worst, residual);
      if (generic) ++pairs;
    } else if (generic) {
      ++controls;
      if (residual > 0.1) ++detected;
    }
  }
  const double rate = controls ? static_cast<double>(detected) / controls : 0.0;
  Outcome out;
  out.pass = run.exit_code == 0 && pairs >= 500 && worst <= 1e-10 && rate >= 0.95;
  out.detail = fmt("spin-1/2, %.0f pairs: max residual %.2e (limit 1e-10); control > 0.1 in %.1f%% (need >= 95%%)",
                   pairs, worst, 100.0 * rate);
  // For a qubit the untransposed residual is ||nu - nu^T||_F = sqrt(2)|y|, with y
  // the Bloch y-component, uniform on [-1, 1] for Haar-pure seeds.
  out.notes.push_back(fmt("expected qubit control rate for Haar-pure seeds is 1 - 0.1/sqrt(2) = %.3f",
                          1.0 - 0.1 / std::sqrt(2.0)));
  Rng wide(cli::kDefaultSeed);
  out.notes.push_back(fmt("spin-3/2 seeds (informational): control > 0.1 in %.1f%% of 500 pairs",
                          100.0 * negative_control_rate({3}, 500, 0.1, wide)));
  return out;
}

Outcome norm_bound_chain() {
  Rng rng(105);
  double worst = -1e300;
  for (int k = 0; k < 100; ++k) {
    const int outcomes = 2 + k % 3;
    const Povm p = random_povm(2, outcomes, rng);
    const Povm q = random_povm(2, outcomes, rng);
    const double delta = povm_distance(p, q);
    const DistanceBounds b = distance_bounds(p, q);
    worst = std::max({worst, delta - b.sum_op, b.sum_op - b.sum_fro});
  }
  return {worst <= 1e-9, fmt("100 qubit POVM pairs, worst chain slack %.2e (limit 1e-9)", worst)};
}

Outcome jensen_bound() {
  Rng rng(106);
  double worst = -1e300;
  for (int n : {2, 3}) {
    for (int k = 0; k < 100; ++k) {
      const ComplexMatrix w = haar_unitary(n, rng);
      const ComplexMatrix v = haar_unitary(n, rng);
      const double delta = povm_distance(observable_from_unitary(w), observable_from_unitary(v));
      worst = std::max(worst, delta - std::sqrt(2.0 * n) * quotient_distance(w, v));
    }
  }
  return {worst <= 1e-9, fmt("n=2,3 x100, max delta - sqrt(2n) d = %.3f (limit 1e-9)", worst)};
}

Outcome net_scaling() {
  const CommandRun run = run_command(cli::cmd_net_scan, cli::RunConfig{});
  // Rows are (epsilon, radius, net_size, coverage_rate, seed); the trailer holds the fit.
  double min_coverage = 1.0;
  std::string sizes;
  for (const auto& row : run.rows) {
    min_coverage = std::min(min_coverage, std::stod(row.at(3)));
    sizes += (sizes.empty() ? "" : "/") + row.at(2);
  }
  const auto fit = nlohmann::json::parse(run.trailer.substr(std::string("# fit ").size()));
  const double exponent = fit.at("exponent").get<double>();
  Outcome out;
  out.pass = run.exit_code == 0 && run.rows.size() == 5 && exponent >= 1.3 && exponent <= 2.7 &&
             min_coverage >= 0.99 && run.seconds <= 300.0;
  out.detail = fmt("n=2, exponent %.3f (band [1.3, 2.7]), min coverage %.3f, %.2f s (limit 300 s)", exponent,
                   min_coverage, run.seconds);
  out.notes.push_back("net sizes " + sizes + fmt(", kappa_fit %.2f", fit.at("kappa_fit").get<double>()));
  return out;
}

Outcome end_to_end_programmability() {
  const double eps = 0.7;
  Rng rng(108);
  const UnitaryNet net = build_net(2, radius_for_epsilon(eps, 2), 2000, rng);
  const Detector f = net_detector(net);
  std::vector<Povm> targets;
  for (int t = 0; t < 200; ++t) targets.push_back(observable_from_unitary(haar_unitary(2, rng)));
  const AccuracyReport report =
      estimate_accuracy(f, targets, ProgramStrategy::from_states(basis_state_programs(f.anc_dim())));
  return {report.epsilon <= eps + 1e-9,
          fmt("%.0f-center net, 200 Haar targets, epsilon %.4f (limit 0.7)", static_cast<double>(net.centers.size()),
              report.epsilon)};
}

Outcome oracle_equivalences() {
  Rng rng(109);
  double two_outcome = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Povm p = random_povm(2 + k % 3, 2, rng);
    const Povm q = random_povm(p.dim(), 2, rng);
    two_outcome = std::max(two_outcome, std::abs(two_outcome_distance(p, q) - povm_distance(p, q)));
  }
  double symmetric = 0.0;
  for (int n = 1; n <= 4; ++n) {
    symmetric = std::max(symmetric, max_abs_diff(su2::symmetric_projector(n), oracle::permutation_average(n)));
  }
  double quotient = 0.0;
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix w = haar_unitary(2, rng);
    const ComplexMatrix v = haar_unitary(2, rng);
    quotient = std::max(quotient, std::abs(oracle::phase_grid_distance(w, v, 360) - quotient_distance(w, v)));
  }
  return {two_outcome <= 1e-10 && symmetric <= 1e-10 && quotient <= 2e-3,
          fmt("two-outcome %.1e, symmetric projector %.1e, quotient grid %.1e", two_outcome, symmetric, quotient)};
}

Outcome structural_invariants() {
  Rng rng(110);
  double affine = 0.0;
  bool valid = true;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 3;
    const int d = 1 + (k / 3) % 4;
    const Detector f(n, d, random_povm(n * d, 2 + k % 3, rng));
    const ComplexMatrix s1 = random_density(d, rng);
    const ComplexMatrix s2 = random_density(d, rng);
    const double lambda = rng.uniform();
    const Povm q1 = program(f, DensityState(s1));
    const Povm q2 = program(f, DensityState(s2));
    const Povm mix = program(f, DensityState(lambda * s1 + (1.0 - lambda) * s2));
    valid = valid && !povm_violation(mix.effects()) && !povm_violation(q1.effects());
    for (std::size_t i = 0; i < mix.size(); ++i) {
      affine = std::max(affine, max_abs_diff(mix[i], lambda * q1[i] + (1.0 - lambda) * q2[i]));
    }
  }
  double unitarity = 0.0, intertwining = 0.0;
  for (int tj1 = 0; tj1 <= 12; ++tj1) {
    for (int tj2 = 0; tj2 <= 12; ++tj2) {
      const su2::AngularMomentum j1{tj1}, j2{tj2};
      const ComplexMatrix u = su2::coupling_isometry(j1, j2);
      unitarity = std::max(unitarity, max_abs_diff(u * u.adjoint(), identity(static_cast<int>(u.rows()))));
      const su2::GroupElement g = su2::GroupElement::random(rng);
      ComplexMatrix coupled = ComplexMatrix::Zero(u.rows(), u.rows());
      for (int tJ = tj1 + tj2; tJ >= std::abs(tj1 - tj2); tJ -= 2) {
        const int off = su2::coupled_block_offset(j1, j2, {tJ});
        coupled.block(off, off, tJ + 1, tJ + 1) = su2::irrep_matrix({tJ}, g);
      }
      const ComplexMatrix product = tensor(su2::irrep_matrix(j1, g), su2::irrep_matrix(j2, g));
      intertwining = std::max(intertwining, max_abs_diff(u * product, coupled * u));
    }
  }
  return {valid && affine <= 1e-12 && unitarity <= 1e-9 && intertwining <= 1e-9,
          fmt("affinity %.1e, coupling unitarity %.1e, intertwining %.1e (j1, j2 <= 6)", affine, unitarity,
              intertwining) +
              (valid ? "" : ", INVALID POVM OUTPUT")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"fiurasek-scaling", fiurasek_scaling},
      {"covariant-linear-scaling", covariant_scaling},
      {"clebsch-gordan-weights", clebsch_gordan_weights},
      {"exact-covariant-programmability", exact_covariant_programmability},
      {"norm-bound-chain", norm_bound_chain},
      {"jensen-bound", jensen_bound},
      {"net-scaling-exponent", net_scaling},
      {"end-to-end-programmability", end_to_end_programmability},
      {"oracle-equivalences", oracle_equivalences},
      {"structural-invariants", structural_invariants},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      out = criteria[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what(), {}};
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %2zu %-32s %s\n", out.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, out.detail.c_str());
    for (const auto& note : out.notes) std::printf("       note: %s\n", note.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
