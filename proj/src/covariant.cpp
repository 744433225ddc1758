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

#include "povmforge/covariant.hpp"

#include "povmforge/errors.hpp"

namespace povmforge::covariant {

UnitaryRep spin_rep(su2::AngularMomentum j) {
  return [j](const su2::GroupElement& g) { return su2::irrep_matrix(j, g); };
}

CovariantSeed::CovariantSeed(DensityState nu_in, UnitaryRep rep_in) : nu(std::move(nu_in)), rep(std::move(rep_in)) {
  if (!rep) throw ValidationError("CovariantSeed: empty representation");
  if (rep(su2::GroupElement()).rows() != nu.dim()) {
    throw ShapeError("CovariantSeed: representation dimension differs from the seed state");
  }
}

CovariantSeed::CovariantSeed(DensityState nu_in)
    : CovariantSeed(std::move(nu_in), spin_rep(su2::AngularMomentum::half())) {}

ComplexVector double_ket(const ComplexMatrix& v) {
  if (v.rows() != v.cols()) throw ShapeError("double_ket: matrix is not square");
  const Eigen::Index n = v.rows();
  ComplexVector out(n * n);
  for (Eigen::Index m = 0; m < n; ++m) {
    for (Eigen::Index k = 0; k < n; ++k) out(m * n + k) = v(m, k);
  }
  return out;
}

ComplexMatrix covariant_density(const ComplexMatrix& nu, const ComplexMatrix& vg) {
  if (nu.rows() != vg.rows() || nu.cols() != vg.cols()) {
    throw ShapeError("covariant_density: seed and representation dimensions differ");
  }
  return vg * nu * vg.adjoint();
}

ComplexMatrix covariant_density(const CovariantSeed& seed, const su2::GroupElement& g) {
  return covariant_density(seed.nu.matrix(), seed.rep(g));
}

ComplexMatrix bell_programmed_density(const ComplexMatrix& program, const ComplexMatrix& vg) {
  if (program.rows() != vg.rows() || program.cols() != vg.cols()) {
    throw ShapeError("bell_programmed_density: program and representation dimensions differ");
  }
  const int n = static_cast<int>(vg.rows());
  const ComplexVector ket = double_ket(vg);
  const ComplexMatrix joint = tensor(identity(n), program) * projector(ket);
  return partial_trace_ancilla(joint, n, n);
}

double bell_program_check(const ComplexMatrix& nu, const ComplexMatrix& vg, TransposeMode mode) {
  const ComplexMatrix program = mode == TransposeMode::kTransposed ? ComplexMatrix(nu.transpose()) : nu;
  return fro_norm(covariant_density(nu, vg) - bell_programmed_density(program, vg));
}

double bell_program_check(const CovariantSeed& seed, const su2::GroupElement& g, TransposeMode mode) {
  return bell_program_check(seed.nu.matrix(), seed.rep(g), mode);
}

}  // namespace povmforge::covariant
