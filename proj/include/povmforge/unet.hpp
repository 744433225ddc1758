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

/**
 * @file unet.hpp
 * @brief Epsilon-nets of unitaries for controlled-unitary detectors.
 *
 * Two unitaries W and D W, with D diagonal in the observable basis, define the
 * same observable {W^dag |psi_i><psi_i| W}. Nets therefore live on the
 * quotient by those phases, an (n^2 - n)-dimensional manifold, measured by
 *
 *     d(W, V) = min_D ||W - D V||_2 = sqrt(sum_i (2 - 2 |<psi_i| V W^dag |psi_i>|)).
 *
 * A net of radius r = eps / sqrt(2n) yields a detector that programs every
 * observable to within eps, since delta(obs(W), obs(V)) <= sqrt(2n) d(W, V).
 */

#ifndef POVMFORGE_UNET_HPP
#define POVMFORGE_UNET_HPP

#include <cstdint>
#include <vector>

#include "povmforge/detector.hpp"

namespace povmforge {

/// Phase-quotient Frobenius distance; `basis` columns are the observable basis.
double quotient_distance(const ComplexMatrix& w, const ComplexMatrix& v, const ComplexMatrix& basis);
double quotient_distance(const ComplexMatrix& w, const ComplexMatrix& v);

struct UnitaryNet {
  int dim = 0;
  double radius = 0.0;
  std::vector<ComplexMatrix> centers;
  std::uint64_t seed = 0;
  std::uint64_t candidates_tested = 0;
};

/// Net radius guaranteeing accuracy eps on n-dimensional observables.
double radius_for_epsilon(double epsilon, int n);

/**
 * Greedy packing: draw Haar candidates, keep one iff it is farther than
 * `radius` from every existing center, and stop after `budget` consecutive
 * rejections. Deterministic in (n, radius, budget, rng seed); a larger budget
 * on the same stream only appends centers. Uses the computational basis.
 */
UnitaryNet build_net(int n, double radius, std::uint64_t budget, Rng& rng);

/// Index and distance of the nearest center.
std::pair<std::size_t, double> nearest_center(const UnitaryNet& net, const ComplexMatrix& w);

/// Fraction of fresh Haar samples within net.radius of some center.
double certify_coverage(const UnitaryNet& net, std::uint64_t samples, Rng& rng);

/// Smallest pairwise center distance (infinity for fewer than two centers).
double min_pairwise_distance(const UnitaryNet& net);

/// controlled_unitary_detector over the net's centers.
Detector net_detector(const UnitaryNet& net, const ComplexMatrix& basis);
Detector net_detector(const UnitaryNet& net);

struct NetScanRow {
  double epsilon = 0.0;
  double radius = 0.0;
  std::size_t net_size = 0;
  double coverage_rate = 0.0;
  std::uint64_t seed = 0;
};

struct NetScan {
  std::vector<NetScanRow> rows;
  /// Least-squares slope of log(net_size) against log(1/eps).
  double exponent = 0.0;
  /// exp(intercept) of the same fit: net_size ~ kappa * (1/eps)^exponent.
  double kappa_fit = 0.0;
};

/// One greedy net per epsilon (each on its own sub-seed), certified on
/// `coverage_samples` fresh samples.
NetScan scaling_scan(int n, const std::vector<double>& eps_list, std::uint64_t budget,
                     std::uint64_t coverage_samples, Rng& rng);

/// Slope and intercept of an ordinary least-squares line.
std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace povmforge

#endif  // POVMFORGE_UNET_HPP
