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

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "povmforge/commands.hpp"

namespace {

using povmforge::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& config, std::optional<std::filesystem::path>& out_path) {
  cmd->add_option("--seed", config.seed, "RNG seed; POVMFORGE_SEED overrides the default")
      ->envname("POVMFORGE_SEED")
      ->capture_default_str();
  cmd->add_option("--tol", config.tolerance, "Absolute tolerance for row-level checks")->capture_default_str();
  cmd->add_option("--out", out_path, "Output file (stdout if omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"povmforge: programmable quantum detector experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", povmforge::cli::kVersion);

  RunConfig config;
  std::optional<std::filesystem::path> out_path;
  std::function<int(const RunConfig&, std::ostream&)> run;

  auto* fiurasek = app.add_subcommand("fiurasek-scan", "Symmetric-projector detector: accuracy vs program qubits");
  add_common(fiurasek, config, out_path);
  fiurasek->add_option("--n-min", config.n_min, "Smallest number of program qubits")->capture_default_str();
  fiurasek->add_option("--n-max", config.n_max, "Largest number of program qubits")->capture_default_str();
  fiurasek->add_option("--samples", config.samples, "Random target observables per row")->capture_default_str();
  fiurasek->callback([&] { run = povmforge::cli::cmd_fiurasek_scan; });

  auto* covariant = app.add_subcommand("covariant-scan", "Covariant spin-j detector: accuracy vs ancilla dimension");
  add_common(covariant, config, out_path);
  covariant->add_option("--j-min", config.twice_j_min, "Smallest 2j")->capture_default_str();
  covariant->add_option("--j-max", config.twice_j_max, "Largest 2j")->capture_default_str();
  covariant->add_option("--samples", config.samples, "Random rotations per row")->capture_default_str();
  covariant->callback([&] { run = povmforge::cli::cmd_covariant_scan; });

  auto* net = app.add_subcommand("net-scan", "Greedy unitary nets: size vs accuracy and fitted exponent");
  add_common(net, config, out_path);
  net->add_option("--n", config.net_dim, "System dimension")->capture_default_str();
  net->add_option("--eps", config.eps, "Target accuracies")->delimiter(',')->capture_default_str();
  net->add_option("--budget", config.budget, "Consecutive rejections that end a net")->capture_default_str();
  net->add_option("--samples", config.coverage_samples, "Fresh samples for coverage certification")
      ->capture_default_str();
  net->add_option("--exponent-min", config.exponent_min, "Lower end of the accepted exponent band")->capture_default_str();
  net->add_option("--exponent-max", config.exponent_max, "Upper end of the accepted exponent band")->capture_default_str();
  net->add_option("--min-coverage", config.min_coverage, "Required coverage rate per row")->capture_default_str();
  net->add_option("--fit-out", config.fit_out, "Write the fitted exponent JSON here");
  net->callback([&] { run = povmforge::cli::cmd_net_scan; });

  auto* exact = app.add_subcommand("exact-check", "Bell-detector programming of covariant POVM densities");
  add_common(exact, config, out_path);
  exact->add_option("--samples", config.exact_pairs, "Random (nu, g) pairs")->capture_default_str();
  exact->add_flag("--negative-control", config.negative_control, "Also report residuals without the transpose");
  exact->callback([&] { run = povmforge::cli::cmd_exact_check; });

  auto* distance = app.add_subcommand("distance", "Exact POVM distance and norm bounds of two POVM JSON files");
  add_common(distance, config, out_path);
  distance->add_option("povm_a", config.povm_a, "First POVM (JSON)")->required()->check(CLI::ExistingFile);
  distance->add_option("povm_b", config.povm_b, "Second POVM (JSON)")->required()->check(CLI::ExistingFile);
  distance->callback([&] { run = povmforge::cli::cmd_distance; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (out_path) {
      std::ofstream file(*out_path);
      if (!file) {
        std::cerr << "error: cannot write " << out_path->string() << '\n';
        return 2;
      }
      return run(config, file);
    }
    return run(config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
