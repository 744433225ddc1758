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
 * @file su2.hpp
 * @brief SU(2) representations, Clebsch-Gordan coupling and the two qubit
 *        programmable detectors built from them.
 *
 * Conventions shared by every function here:
 *  - Condon-Shortley phases.
 *  - |j,m> bases are ordered with m descending: j, j-1, ..., -j.
 *  - The qubit basis is |1/2,1/2> = |0>, |1/2,-1/2> = |1>.
 *  - Coupled bases list J descending, then M descending within each J.
 *  - Half-integers are carried as twice their value.
 */

#ifndef POVMFORGE_SU2_HPP
#define POVMFORGE_SU2_HPP

#include <array>

#include "povmforge/detector.hpp"

namespace povmforge::su2 {

/// Spin j stored as 2j.
struct AngularMomentum {
  int twice_j = 0;

  constexpr int dim() const { return twice_j + 1; }
  constexpr double value() const { return 0.5 * twice_j; }
  static constexpr AngularMomentum half() { return {1}; }
};

/**
 * Element of SU(2), held both as a 2x2 special-unitary matrix and as ZYZ Euler
 * angles with u = exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz).
 *
 * The matrix is authoritative; Euler angles recovered from a matrix are only
 * determined up to the usual sign and gimbal ambiguities.
 */
class GroupElement {
 public:
  GroupElement();
  static GroupElement from_euler(double alpha, double beta, double gamma);
  /// Throws ValidationError unless u is 2x2 special unitary within 1e-10.
  static GroupElement from_matrix(const ComplexMatrix& u);
  /// Haar-random element.
  static GroupElement random(Rng& rng);

  const ComplexMatrix& matrix() const { return matrix_; }
  const std::array<double, 3>& euler() const { return euler_; }

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;

 private:
  ComplexMatrix matrix_;
  std::array<double, 3> euler_;
};

/// Spin-j matrices J_z, J_y, J_+ in the descending-m basis.
ComplexMatrix spin_jz(AngularMomentum j);
ComplexMatrix spin_jy(AngularMomentum j);

/// Unitary irrep matrix of g on spin j, in the descending-m basis. Built as
/// the (2j)-th symmetric power of the 2x2 matrix, so it is an exact
/// homomorphism: irrep(j, g1) irrep(j, g2) == irrep(j, g1 * g2).
ComplexMatrix irrep_matrix(AngularMomentum j, const GroupElement& g);

/**
 * <j1 m1; j2 m2 | J M>, Condon-Shortley convention, all arguments doubled.
 * Computed from the Racah closed form in exact rational arithmetic; only the
 * final square root is taken in floating point.
 *
 * Throws ValidationError for malformed labels (negative j, |m| > j, or m with
 * the wrong parity). Returns 0 when M != m1 + m2 or the triangle rule fails.
 */
double clebsch_gordan(int twice_j1, int twice_m1, int twice_j2, int twice_m2, int twice_J, int twice_M);

/// Unitary mapping the product basis |j1 m1> (x) |j2 m2> (system-major) to
/// the coupled basis |J M>. Row r = coupled state, column c = product state.
ComplexMatrix coupling_isometry(AngularMomentum j1, AngularMomentum j2);

/// Row offset of the J block inside coupling_isometry(j1, j2).
int coupled_block_offset(AngularMomentum j1, AngularMomentum j2, AngularMomentum total);

inline constexpr int kMaxSymmetricQubits = 12;
inline constexpr int kMaxFiurasekProgramQubits = 11;

/// Projector onto the permutation-symmetric subspace of (C^2)^{(x) N},
/// assembled from Dicke states. Throws CapacityError for N > 12.
ComplexMatrix symmetric_projector(int num_qubits);

/// Two-outcome detector {Z+, I - Z+} on 1 + N qubits: the system qubit plus an
/// N-qubit ancilla programmed with |psi><psi|^{(x) N}.
Detector fiurasek_detector(int num_program_qubits);
DensityState fiurasek_program(const ComplexVector& psi, int num_program_qubits);

/// Covariant detector on spin-1/2 (x) spin-j: F_0 projects onto total spin
/// j + 1/2, F_1 onto j - 1/2. Requires twice_j >= 1.
Detector covariant_qubit_detector(AngularMomentum j);

/// Program state W_g |j,j><j,j| W_g^dag.
DensityState covariant_program(AngularMomentum j, const GroupElement& g);

/// The qubit observable {V_g |0><0| V_g^dag, V_g |1><1| V_g^dag}.
Povm rotated_qubit_observable(const GroupElement& g);

}  // namespace povmforge::su2

#endif  // POVMFORGE_SU2_HPP
