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
 * @file covariant.hpp
 * @brief Exactly programmable covariant POVMs.
 *
 * A covariant POVM density on a compact group has the form V_g nu V_g^dag with
 * nu a state. The Bell detector {|V_g>><<V_g|} on system (x) ancilla, with the
 * ancilla prepared in nu^T, reproduces that density exactly:
 *
 *     V_g nu V_g^dag = Tr_A[(I (x) nu^T) |V_g>><<V_g|].
 *
 * The continuous POVM is handled pointwise, one group element at a time.
 */

#ifndef POVMFORGE_COVARIANT_HPP
#define POVMFORGE_COVARIANT_HPP

#include <functional>

#include "povmforge/povm.hpp"
#include "povmforge/su2.hpp"

namespace povmforge::covariant {

/// Unitary representation g -> V_g.
using UnitaryRep = std::function<ComplexMatrix(const su2::GroupElement&)>;

/// Spin-j representation from su2::irrep_matrix; spin_rep(1/2) is the default.
UnitaryRep spin_rep(su2::AngularMomentum j);

struct CovariantSeed {
  /// Throws ShapeError if rep(identity) does not match nu's dimension.
  CovariantSeed(DensityState nu, UnitaryRep rep);
  explicit CovariantSeed(DensityState nu);

  int dim() const { return nu.dim(); }

  DensityState nu;
  UnitaryRep rep;
};

/// |V>> = sum_{mn} <m|V|n> |m> (x) |n>: the row-major flattening of V.
ComplexVector double_ket(const ComplexMatrix& v);

/// V_g nu V_g^dag.
ComplexMatrix covariant_density(const ComplexMatrix& nu, const ComplexMatrix& vg);
ComplexMatrix covariant_density(const CovariantSeed& seed, const su2::GroupElement& g);

/// Tr_A[(I (x) program) |V>><<V|]; with program = nu^T this is V nu V^dag.
ComplexMatrix bell_programmed_density(const ComplexMatrix& program, const ComplexMatrix& vg);

enum class TransposeMode { kTransposed, kOmitted };

/// ||V_g nu V_g^dag - Tr_A[(I (x) nu^T) |V_g>><<V_g|]||_2. With
/// TransposeMode::kOmitted nu replaces nu^T, as a negative control.
double bell_program_check(const CovariantSeed& seed, const su2::GroupElement& g,
                          TransposeMode mode = TransposeMode::kTransposed);
double bell_program_check(const ComplexMatrix& nu, const ComplexMatrix& vg,
                          TransposeMode mode = TransposeMode::kTransposed);

}  // namespace povmforge::covariant

#endif  // POVMFORGE_COVARIANT_HPP
