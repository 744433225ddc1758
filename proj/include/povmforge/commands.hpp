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

// Experiment drivers behind the `povmforge` subcommands. Each writes its
// table to `out`, beginning with a '#' header line that echoes the version,
// seed and parameters, and returns the process exit status (0 iff every
// row-level check passed).

#ifndef POVMFORGE_COMMANDS_HPP
#define POVMFORGE_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace povmforge::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20040601;
inline constexpr double kExactResidualBound = 1e-10;
inline constexpr double kNegativeControlThreshold = 0.1;

struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  double tolerance = 1e-9;

  // fiurasek-scan: program-register sizes N.
  int n_min = 1;
  int n_max = 6;
  // covariant-scan: twice_j range.
  int twice_j_min = 1;
  int twice_j_max = 9;
  // Targets per scan row.
  int samples = 20;

  // net-scan.
  int net_dim = 2;
  std::vector<double> eps = {1.2, 0.9, 0.7, 0.5, 0.35};
  std::uint64_t budget = 2000;
  std::uint64_t coverage_samples = 1000;
  double exponent_min = 1.3;
  double exponent_max = 2.7;
  double min_coverage = 0.99;
  std::optional<std::filesystem::path> fit_out;

  // exact-check: random (nu, g) pairs, and whether to append rows computed
  // without the transpose.
  int exact_pairs = 500;
  bool negative_control = false;

  // distance.
  std::filesystem::path povm_a;
  std::filesystem::path povm_b;
};

int cmd_fiurasek_scan(const RunConfig& config, std::ostream& out);
int cmd_covariant_scan(const RunConfig& config, std::ostream& out);
/// CSV to `out`; the fit JSON goes to config.fit_out, or to `out` as a
/// trailing '#' line when no fit path is set.
int cmd_net_scan(const RunConfig& config, std::ostream& out);
int cmd_exact_check(const RunConfig& config, std::ostream& out);
/// JSON {delta, sum_op_bound, sum_fro_bound, witness_state, bounds_ordered}.
int cmd_distance(const RunConfig& config, std::ostream& out);

}  // namespace povmforge::cli

#endif  // POVMFORGE_COMMANDS_HPP
