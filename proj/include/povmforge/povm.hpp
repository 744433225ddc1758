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

#ifndef POVMFORGE_POVM_HPP
#define POVMFORGE_POVM_HPP

#include <optional>
#include <string>
#include <vector>

#include "povmforge/linalg.hpp"

namespace povmforge {

/// Hermitian, positive semidefinite, unit-trace matrix.
class DensityState {
 public:
  /// Validates the matrix; throws ValidationError on violation.
  explicit DensityState(ComplexMatrix matrix);

  static DensityState pure(const ComplexVector& ket);
  static DensityState maximally_mixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Description of the first invariant a candidate POVM breaks, if any.
std::optional<std::string> povm_violation(const std::vector<ComplexMatrix>& effects);

/**
 * Finite-outcome POVM: an ordered list of n x n effects, each Hermitian and
 * positive semidefinite, summing to the identity. Outcomes are labelled by
 * position; distances compare effects with the same label.
 */
class Povm {
 public:
  /// Throws ValidationError if `effects` is not a POVM.
  explicit Povm(std::vector<ComplexMatrix> effects);

  int dim() const { return dim_; }
  std::size_t size() const { return effects_.size(); }
  const ComplexMatrix& operator[](std::size_t i) const { return effects_[i]; }
  const std::vector<ComplexMatrix>& effects() const { return effects_; }

 private:
  int dim_;
  std::vector<ComplexMatrix> effects_;
};

/// Born rule: p_i = Re Tr[rho P_i].
std::vector<double> born_probabilities(const DensityState& rho, const Povm& p);

/// Columns of `basis` are the orthonormal vectors psi_i.
/// Returns the observable P_i = W^dag |psi_i><psi_i| W.
Povm observable_from_unitary(const ComplexMatrix& w, const ComplexMatrix& basis);
Povm observable_from_unitary(const ComplexMatrix& w);

/// Largest outcome count accepted by povm_distance (2^20 sign vectors).
inline constexpr std::size_t kMaxDistanceOutcomes = 20;

struct DistanceResult {
  double delta = 0.0;
  /// Pure state attaining the maximum.
  ComplexVector witness;
  /// Sign pattern s_i of the optimal signed sum.
  std::vector<int> signs;
};

/**
 * Exact max_rho sum_i |Tr[rho (P_i - Q_i)]|.
 *
 * sum_i |x_i| = max_s sum_i s_i x_i over s in {+1,-1}^m, and the maximum of
 * Tr[rho A] over states is the top eigenvalue of A, so the distance is the
 * largest top eigenvalue of sum_i s_i (P_i - Q_i) over all sign vectors. The
 * optimum is attained on a pure state (the top eigenvector), which is
 * returned as the witness.
 */
DistanceResult povm_distance_witness(const Povm& p, const Povm& q);
double povm_distance(const Povm& p, const Povm& q);

/// Closed form for two-outcome POVMs: 2 * ||P_0 - Q_0||.
double two_outcome_distance(const Povm& p, const Povm& q);

struct DistanceBounds {
  double sum_op = 0.0;
  double sum_fro = 0.0;
};

/// (sum_i ||P_i - Q_i||, sum_i ||P_i - Q_i||_2); both upper-bound povm_distance.
DistanceBounds distance_bounds(const Povm& p, const Povm& q);

}  // namespace povmforge

#endif  // POVMFORGE_POVM_HPP
