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

#include "povmforge/povm.hpp"

#include <cmath>
#include <limits>

#include "povmforge/errors.hpp"

namespace povmforge {

namespace {

std::optional<std::string> state_violation(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) return "matrix is not square";
  if (!all_finite(m)) return "matrix has non-finite entries";
  if (!is_hermitian(m)) return "matrix is not Hermitian";
  if (herm_eig(m).values(0) < -kPsdTol) return "matrix is not positive semidefinite";
  if (std::abs(m.trace() - Complex(1.0)) > kTraceTol) return "trace is not 1";
  return std::nullopt;
}

void require_same_shape(const Povm& p, const Povm& q, const char* op) {
  if (p.dim() != q.dim() || p.size() != q.size()) {
    throw ShapeError(std::string(op) + ": POVMs differ in dimension or outcome count");
  }
}

}  // namespace

DensityState::DensityState(ComplexMatrix matrix) : matrix_(std::move(matrix)) {
  if (auto why = state_violation(matrix_)) throw ValidationError("DensityState: " + *why);
}

DensityState DensityState::pure(const ComplexVector& ket) {
  const double norm = ket.norm();
  if (!(norm > 0.0)) throw ValidationError("DensityState::pure: zero vector");
  return DensityState(projector(ket / norm));
}

DensityState DensityState::maximally_mixed(int dim) {
  return DensityState(identity(dim) / static_cast<double>(dim));
}

std::optional<std::string> povm_violation(const std::vector<ComplexMatrix>& effects) {
  if (effects.empty()) return "no effects";
  const Eigen::Index n = effects.front().rows();
  if (n == 0) return "zero-dimensional effect";
  ComplexMatrix total = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < effects.size(); ++i) {
    const ComplexMatrix& e = effects[i];
    const std::string label = "effect " + std::to_string(i);
    if (e.rows() != n || e.cols() != n) return label + " has the wrong shape";
    if (!all_finite(e)) return label + " has non-finite entries";
    if (!is_hermitian(e)) return label + " is not Hermitian";
    if (herm_eig(e).values(0) < -kPsdTol) return label + " is not positive semidefinite";
    total += e;
  }
  if ((total - ComplexMatrix::Identity(n, n)).norm() > kPsdTol) {
    return "effects do not sum to the identity";
  }
  return std::nullopt;
}

Povm::Povm(std::vector<ComplexMatrix> effects) : dim_(0), effects_(std::move(effects)) {
  if (auto why = povm_violation(effects_)) throw ValidationError("Povm: " + *why);
  dim_ = static_cast<int>(effects_.front().rows());
}

std::vector<double> born_probabilities(const DensityState& rho, const Povm& p) {
  if (rho.dim() != p.dim()) throw ShapeError("born_probabilities: state and POVM dimensions differ");
  std::vector<double> probs;
  probs.reserve(p.size());
  for (const auto& effect : p.effects()) {
    // Tr[rho P] without forming the product.
    probs.push_back(rho.matrix().cwiseProduct(effect.transpose()).sum().real());
  }
  return probs;
}

Povm observable_from_unitary(const ComplexMatrix& w, const ComplexMatrix& basis) {
  require_unitary(w, "observable_from_unitary: w");
  if (basis.rows() != w.rows()) throw ShapeError("observable_from_unitary: basis dimension differs");
  require_unitary(basis, "observable_from_unitary: basis");
  std::vector<ComplexMatrix> effects;
  effects.reserve(basis.cols());
  for (Eigen::Index i = 0; i < basis.cols(); ++i) {
    const ComplexVector rotated = w.adjoint() * basis.col(i);
    effects.push_back(projector(rotated));
  }
  return Povm(std::move(effects));
}

Povm observable_from_unitary(const ComplexMatrix& w) {
  return observable_from_unitary(w, identity(static_cast<int>(w.rows())));
}

DistanceResult povm_distance_witness(const Povm& p, const Povm& q) {
  require_same_shape(p, q, "povm_distance");
  const std::size_t m = p.size();
  if (m > kMaxDistanceOutcomes) {
    throw CapacityError("povm_distance: " + std::to_string(m) + " outcomes exceeds the exact cap of " +
                        std::to_string(kMaxDistanceOutcomes) + "; use distance_bounds instead");
  }
  std::vector<ComplexMatrix> diffs;
  diffs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) diffs.push_back(p[i] - q[i]);

  DistanceResult best;
  best.delta = -std::numeric_limits<double>::infinity();
  const int n = p.dim();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ComplexMatrix signed_sum = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1U) {
        signed_sum -= diffs[i];
      } else {
        signed_sum += diffs[i];
      }
    }
    const HermitianEigen eig = herm_eig(signed_sum);
    const double top = eig.values(n - 1);
    if (top > best.delta) {
      best.delta = top;
      best.witness = eig.vectors.col(n - 1);
      best.signs.assign(m, 1);
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1U) best.signs[i] = -1;
      }
    }
  }
  best.delta = std::max(best.delta, 0.0);
  return best;
}

double povm_distance(const Povm& p, const Povm& q) { return povm_distance_witness(p, q).delta; }

double two_outcome_distance(const Povm& p, const Povm& q) {
  if (p.size() != 2 || q.size() != 2) {
    throw ValidationError("two_outcome_distance: both POVMs must have exactly two outcomes");
  }
  require_same_shape(p, q, "two_outcome_distance");
  return 2.0 * op_norm(p[0] - q[0]);
}

DistanceBounds distance_bounds(const Povm& p, const Povm& q) {
  require_same_shape(p, q, "distance_bounds");
  DistanceBounds bounds;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const ComplexMatrix diff = p[i] - q[i];
    bounds.sum_op += op_norm(diff);
    bounds.sum_fro += fro_norm(diff);
  }
  return bounds;
}

}  // namespace povmforge
