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

#include "povmforge/unet.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "povmforge/errors.hpp"

namespace povmforge {

namespace {

// Computational-basis fast path: <i| V W^dag |i> = row_i(V) . conj(row_i(W)).
double quotient_distance_computational(const ComplexMatrix& w, const ComplexMatrix& v) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    total += 2.0 - 2.0 * std::abs(v.row(i).dot(w.row(i)));
  }
  return std::sqrt(std::max(total, 0.0));
}

}  // namespace

double quotient_distance(const ComplexMatrix& w, const ComplexMatrix& v, const ComplexMatrix& basis) {
  if (w.rows() != v.rows() || w.cols() != v.cols() || w.rows() != w.cols() || basis.rows() != w.rows()) {
    throw ShapeError("quotient_distance: dimension mismatch");
  }
  const ComplexMatrix overlap = basis.adjoint() * v * w.adjoint() * basis;
  double total = 0.0;
  for (Eigen::Index i = 0; i < overlap.rows(); ++i) total += 2.0 - 2.0 * std::abs(overlap(i, i));
  return std::sqrt(std::max(total, 0.0));
}

double quotient_distance(const ComplexMatrix& w, const ComplexMatrix& v) {
  if (w.rows() != v.rows() || w.cols() != v.cols() || w.rows() != w.cols()) {
    throw ShapeError("quotient_distance: dimension mismatch");
  }
  return quotient_distance_computational(w, v);
}

double radius_for_epsilon(double epsilon, int n) { return epsilon / std::sqrt(2.0 * n); }

UnitaryNet build_net(int n, double radius, std::uint64_t budget, Rng& rng) {
  if (n < 1) throw ValidationError("build_net: n must be positive");
  if (!(radius > 0.0)) throw ValidationError("build_net: radius must be positive");
  if (budget < 1) throw ValidationError("build_net: budget must be at least 1");
  UnitaryNet net;
  net.dim = n;
  net.radius = radius;
  net.seed = rng.seed();
  std::uint64_t rejected_in_a_row = 0;
  while (rejected_in_a_row < budget) {
    ComplexMatrix candidate = haar_unitary(n, rng);
    ++net.candidates_tested;
    bool separated = true;
    for (const auto& center : net.centers) {
      if (quotient_distance_computational(candidate, center) <= radius) {
        separated = false;
        break;
      }
    }
    if (separated) {
      net.centers.push_back(std::move(candidate));
      rejected_in_a_row = 0;
    } else {
      ++rejected_in_a_row;
    }
  }
  return net;
}

std::pair<std::size_t, double> nearest_center(const UnitaryNet& net, const ComplexMatrix& w) {
  if (net.centers.empty()) throw ValidationError("nearest_center: empty net");
  std::size_t best = 0;
  double best_distance = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < net.centers.size(); ++k) {
    const double dist = quotient_distance(w, net.centers[k]);
    if (dist < best_distance) {
      best_distance = dist;
      best = k;
    }
  }
  return {best, best_distance};
}

double certify_coverage(const UnitaryNet& net, std::uint64_t samples, Rng& rng) {
  if (samples < 1) throw ValidationError("certify_coverage: need at least one sample");
  if (net.centers.empty()) return 0.0;
  std::uint64_t covered = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    const ComplexMatrix w = haar_unitary(net.dim, rng);
    for (const auto& center : net.centers) {
      if (quotient_distance_computational(w, center) <= net.radius) {
        ++covered;
        break;
      }
    }
  }
  return static_cast<double>(covered) / static_cast<double>(samples);
}

double min_pairwise_distance(const UnitaryNet& net) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < net.centers.size(); ++a) {
    for (std::size_t b = a + 1; b < net.centers.size(); ++b) {
      best = std::min(best, quotient_distance(net.centers[a], net.centers[b]));
    }
  }
  return best;
}

Detector net_detector(const UnitaryNet& net, const ComplexMatrix& basis) {
  if (net.centers.empty()) throw ValidationError("net_detector: empty net");
  return controlled_unitary_detector(net.centers, basis);
}

Detector net_detector(const UnitaryNet& net) { return net_detector(net, identity(net.dim)); }

std::pair<double, double> fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw ValidationError("fit_line: need at least two points");
  const double count = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("fit_line: degenerate abscissae");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

NetScan scaling_scan(int n, const std::vector<double>& eps_list, std::uint64_t budget,
                     std::uint64_t coverage_samples, Rng& rng) {
  if (eps_list.empty()) throw ValidationError("scaling_scan: empty epsilon list");
  NetScan scan;
  std::vector<double> log_inv_eps, log_size;
  for (double eps : eps_list) {
    if (!(eps > 0.0 && eps <= 2.0)) {
      throw ValidationError("scaling_scan: epsilon " + std::to_string(eps) + " outside (0, 2]");
    }
    Rng row_rng = rng.fork();
    NetScanRow row;
    row.epsilon = eps;
    row.radius = radius_for_epsilon(eps, n);
    row.seed = row_rng.seed();
    const UnitaryNet net = build_net(n, row.radius, budget, row_rng);
    Rng probe = row_rng.fork();
    row.net_size = net.centers.size();
    row.coverage_rate = certify_coverage(net, coverage_samples, probe);
    scan.rows.push_back(row);
    log_inv_eps.push_back(std::log(1.0 / eps));
    log_size.push_back(std::log(static_cast<double>(row.net_size)));
  }
  if (scan.rows.size() >= 2) {
    const auto [slope, intercept] = fit_line(log_inv_eps, log_size);
    scan.exponent = slope;
    scan.kappa_fit = std::exp(intercept);
  }
  return scan;
}

}  // namespace povmforge
