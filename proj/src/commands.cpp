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

#include "povmforge/commands.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "povmforge/covariant.hpp"
#include "povmforge/errors.hpp"
#include "povmforge/io.hpp"
#include "povmforge/su2.hpp"
#include "povmforge/unet.hpp"

namespace povmforge::cli {

namespace {

using io::format_double;

void write_header(std::ostream& out, const char* command, const RunConfig& c, const std::string& params) {
  out << "# povmforge " << kVersion << ' ' << command << " seed=" << c.seed << " tol=" << format_double(c.tolerance)
      << (params.empty() ? "" : " ") << params << '\n';
}

std::string eps_list_string(const std::vector<double>& eps) {
  std::string s;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i) s += ';';
    s += format_double(eps[i]);
  }
  return s;
}

Povm qubit_observable(const ComplexVector& psi) {
  const ComplexMatrix p0 = projector(psi);
  return Povm({p0, identity(2) - p0});
}

// Top eigenvector of the first effect: the psi of a rank-1 qubit observable.
ComplexVector leading_vector(const Povm& target) {
  const HermitianEigen eig = herm_eig(target[0]);
  return eig.vectors.col(eig.values.size() - 1);
}

double max_abs_error(const AccuracyReport& report, double theory) {
  double worst = 0.0;
  for (const auto& t : report.per_target) worst = std::max(worst, std::abs(t.delta - theory));
  return worst;
}

}  // namespace

int cmd_fiurasek_scan(const RunConfig& c, std::ostream& out) {
  if (c.n_min < 1 || c.n_max < c.n_min) throw ValidationError("fiurasek-scan: need 1 <= n-min <= n-max");
  if (c.n_max > su2::kMaxFiurasekProgramQubits) {
    throw CapacityError("fiurasek-scan: n-max " + std::to_string(c.n_max) + " exceeds the cap of " +
                        std::to_string(su2::kMaxFiurasekProgramQubits) + " program qubits");
  }
  if (c.samples < 1) throw ValidationError("fiurasek-scan: samples must be positive");
  write_header(out, "fiurasek-scan", c,
               "n_min=" + std::to_string(c.n_min) + " n_max=" + std::to_string(c.n_max) +
                   " samples=" + std::to_string(c.samples));
  out << "N,d,epsilon_measured,epsilon_theory,max_abs_err,d_from_epsilon\n";
  Rng rng(c.seed);
  bool ok = true;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    Rng row_rng = rng.fork();
    const Detector detector = su2::fiurasek_detector(n);
    std::vector<Povm> targets;
    for (int s = 0; s < c.samples; ++s) targets.push_back(qubit_observable(haar_state(2, row_rng)));
    const auto strategy = ProgramStrategy::matched(
        [n](const Povm& target, std::size_t) { return su2::fiurasek_program(leading_vector(target), n); });
    const AccuracyReport report = estimate_accuracy(detector, targets, strategy);
    const double theory = 2.0 / (n + 1);
    const double err = max_abs_error(report, theory);
    ok = ok && err <= c.tolerance;
    out << n << ',' << detector.anc_dim() << ',' << format_double(report.epsilon) << ',' << format_double(theory)
        << ',' << format_double(err) << ',' << format_double(0.5 * std::pow(4.0, 1.0 / theory)) << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_covariant_scan(const RunConfig& c, std::ostream& out) {
  if (c.twice_j_min < 1 || c.twice_j_max < c.twice_j_min) {
    throw ValidationError("covariant-scan: need 1 <= j-min <= j-max (twice j)");
  }
  if (c.samples < 1) throw ValidationError("covariant-scan: samples must be positive");
  write_header(out, "covariant-scan", c,
               "j_min_twice=" + std::to_string(c.twice_j_min) + " j_max_twice=" + std::to_string(c.twice_j_max) +
                   " samples=" + std::to_string(c.samples));
  out << "twice_j,d,epsilon_measured,epsilon_theory,max_abs_err,d_from_epsilon\n";
  Rng rng(c.seed);
  bool ok = true;
  for (int tj = c.twice_j_min; tj <= c.twice_j_max; ++tj) {
    Rng row_rng = rng.fork();
    const su2::AngularMomentum j{tj};
    const Detector detector = su2::covariant_qubit_detector(j);
    std::vector<su2::GroupElement> rotations;
    std::vector<Povm> targets;
    for (int s = 0; s < c.samples; ++s) {
      rotations.push_back(su2::GroupElement::random(row_rng));
      targets.push_back(su2::rotated_qubit_observable(rotations.back()));
    }
    const auto strategy = ProgramStrategy::matched(
        [&](const Povm&, std::size_t id) { return su2::covariant_program(j, rotations[id]); });
    const AccuracyReport report = estimate_accuracy(detector, targets, strategy);
    const double theory = 2.0 / j.dim();
    const double err = max_abs_error(report, theory);
    ok = ok && err <= c.tolerance;
    out << tj << ',' << j.dim() << ',' << format_double(report.epsilon) << ',' << format_double(theory) << ','
        << format_double(err) << ',' << format_double(2.0 / theory) << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_net_scan(const RunConfig& c, std::ostream& out) {
  if (c.net_dim < 1) throw ValidationError("net-scan: n must be positive");
  write_header(out, "net-scan", c,
               "n=" + std::to_string(c.net_dim) + " eps=" + eps_list_string(c.eps) +
                   " budget=" + std::to_string(c.budget) + " coverage_samples=" + std::to_string(c.coverage_samples));
  Rng rng(c.seed);
  const NetScan scan = scaling_scan(c.net_dim, c.eps, c.budget, c.coverage_samples, rng);
  out << "epsilon,radius,net_size,coverage_rate,seed\n";
  bool ok = true;
  for (const auto& row : scan.rows) {
    ok = ok && row.coverage_rate >= c.min_coverage;
    out << format_double(row.epsilon) << ',' << format_double(row.radius) << ',' << row.net_size << ','
        << format_double(row.coverage_rate) << ',' << row.seed << '\n';
  }
  const bool exponent_ok = scan.rows.size() >= 2 && scan.exponent >= c.exponent_min && scan.exponent <= c.exponent_max;
  ok = ok && exponent_ok;
  const io::json fit = {{"n", c.net_dim},
                        {"exponent", scan.exponent},
                        {"kappa_fit", scan.kappa_fit},
                        {"exponent_band", {c.exponent_min, c.exponent_max}},
                        {"theory_exponent", c.net_dim * (c.net_dim - 1)},
                        {"min_coverage", c.min_coverage},
                        {"seed", c.seed},
                        {"pass", ok}};
  if (c.fit_out) {
    io::write_json_file(*c.fit_out, fit);
  } else {
    out << "# fit " << fit.dump() << '\n';
  }
  return ok ? 0 : 1;
}

int cmd_exact_check(const RunConfig& c, std::ostream& out) {
  if (c.exact_pairs < 1) throw ValidationError("exact-check: samples must be positive");
  write_header(out, "exact-check", c,
               "samples=" + std::to_string(c.exact_pairs) + " negative_control=" + (c.negative_control ? "1" : "0"));
  out << "alpha,beta,gamma,nu_id,mode,residual,flag\n";
  Rng rng(c.seed);
  bool ok = true;
  auto emit = [&](const su2::GroupElement& g, const std::string& nu_id, const char* mode, double residual,
                  const char* flag) {
    const auto& e = g.euler();
    out << format_double(e[0]) << ',' << format_double(e[1]) << ',' << format_double(e[2]) << ',' << nu_id << ','
        << mode << ',' << format_double(residual) << ',' << flag << '\n';
  };
  auto check = [&](const covariant::CovariantSeed& seed, const su2::GroupElement& g, const std::string& nu_id) {
    const double residual = covariant::bell_program_check(seed, g);
    const bool pass = residual <= kExactResidualBound;
    ok = ok && pass;
    emit(g, nu_id, "transpose", residual, pass ? "ok" : "FAIL");
    if (c.negative_control) {
      const double control = covariant::bell_program_check(seed, g, covariant::TransposeMode::kOmitted);
      emit(g, nu_id, "no-transpose", control,
           control > kNegativeControlThreshold ? "control_detected" : "control_missed");
    }
  };

  const covariant::CovariantSeed mixed(DensityState::maximally_mixed(2));
  check(mixed, su2::GroupElement::random(rng), "maximally_mixed");
  for (int s = 0; s < c.exact_pairs; ++s) {
    const covariant::CovariantSeed seed(DensityState::pure(haar_state(2, rng)));
    check(seed, su2::GroupElement::random(rng), "pure_" + std::to_string(s));
  }
  return ok ? 0 : 1;
}

int cmd_distance(const RunConfig& c, std::ostream& out) {
  const Povm a = io::povm_from_json(io::read_json_file(c.povm_a));
  const Povm b = io::povm_from_json(io::read_json_file(c.povm_b));
  const DistanceResult result = povm_distance_witness(a, b);
  const DistanceBounds bounds = distance_bounds(a, b);
  const bool ordered = result.delta <= bounds.sum_op + c.tolerance && bounds.sum_op <= bounds.sum_fro + c.tolerance;
  const io::json j = {{"delta", result.delta},
                      {"sum_op_bound", bounds.sum_op},
                      {"sum_fro_bound", bounds.sum_fro},
                      {"witness_state", io::matrix_to_json(projector(result.witness))},
                      {"bounds_ordered", ordered},
                      {"meta", {{"povmforge", kVersion},
                                {"command", "distance"},
                                {"povm_a", c.povm_a.string()},
                                {"povm_b", c.povm_b.string()},
                                {"tol", c.tolerance}}}};
  out << j.dump(2) << '\n';
  return ordered ? 0 : 1;
}

}  // namespace povmforge::cli
