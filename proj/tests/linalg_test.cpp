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

#include "povmforge/linalg.hpp"

#include <cmath>
#include <cstring>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "povmforge/errors.hpp"
#include "test_util.hpp"

using namespace povmforge;
using povmforge::testing::max_abs_diff;
using povmforge::testing::random_density;
using povmforge::testing::random_hermitian;
using povmforge::testing::random_matrix;

TEST(rng, identical_seeds_replay) {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) {
    ASSERT_EQ(a.next_u64(), b.next_u64());
    ASSERT_EQ(a.normal(), b.normal());
  }
  Rng c(43);
  Rng d(42);
  EXPECT_NE(c.next_u64(), d.next_u64());
}

TEST(rng, fork_is_deterministic_and_distinct) {
  Rng a(7), b(7);
  Rng fa = a.fork(), fb = b.fork();
  EXPECT_EQ(fa.seed(), fb.seed());
  EXPECT_NE(fa.seed(), a.seed());
  Rng second = a.fork();
  EXPECT_NE(second.seed(), fa.seed());
}

TEST(tensor, identity_and_basis_projectors) {
  EXPECT_EQ(max_abs_diff(tensor(identity(2), identity(2)), identity(4)), 0.0);
  ComplexMatrix p0 = ComplexMatrix::Zero(2, 2), p1 = ComplexMatrix::Zero(2, 2);
  p0(0, 0) = 1.0;
  p1(1, 1) = 1.0;
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  EXPECT_EQ(max_abs_diff(tensor(p0, p1), expected), 0.0);
}

TEST(tensor, matches_index_formula) {
  Rng rng(1);
  const ComplexMatrix a = random_matrix(2, 2, rng);
  const ComplexMatrix b = random_matrix(3, 3, rng);
  const ComplexMatrix ab = tensor(a, b);
  ASSERT_EQ(ab.rows(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) EXPECT_EQ(ab(3 * i + k, 3 * j + l), a(i, j) * b(k, l));
}

TEST(tensor, rectangular_and_associative) {
  Rng rng(2);
  const ComplexMatrix a = random_matrix(2, 3, rng);
  const ComplexMatrix b = random_matrix(3, 1, rng);
  const ComplexMatrix c = random_matrix(2, 2, rng);
  EXPECT_LE(max_abs_diff(tensor(a, b), oracle::kron(a, b)), 1e-15);
  EXPECT_LE(max_abs_diff(tensor(tensor(a, b), c), tensor(a, tensor(b, c))), 1e-12);
}

TEST(partial_trace, product_states_factor) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix rho = random_density(3, rng);
    const ComplexMatrix sigma = random_matrix(4, 4, rng);
    const ComplexMatrix reduced = partial_trace_ancilla(tensor(rho, sigma), 3, 4);
    EXPECT_LE(max_abs_diff(reduced, sigma.trace() * rho), 1e-12);
  }
  EXPECT_LE(max_abs_diff(partial_trace_ancilla(identity(6), 2, 3), 3.0 * identity(2)), 0.0);
}

TEST(partial_trace, matches_index_summation_and_preserves_trace) {
  Rng rng(4);
  const ComplexMatrix h = random_hermitian(4, rng);
  EXPECT_LE(max_abs_diff(partial_trace_ancilla(h, 2, 2), oracle::partial_trace_second(h, 2, 2)), 1e-15);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix m = random_matrix(6, 6, rng);
    EXPECT_LE(std::abs(partial_trace_ancilla(m, 3, 2).trace() - m.trace()), 1e-12);
    EXPECT_LE(std::abs(partial_trace_ancilla(m, 2, 3).trace() - m.trace()), 1e-12);
  }
}

TEST(partial_trace, rejects_mismatched_shape) {
  EXPECT_THROW(partial_trace_ancilla(identity(6), 2, 2), ShapeError);
  EXPECT_THROW(partial_trace_ancilla(ComplexMatrix::Zero(4, 3), 2, 2), ShapeError);
}

TEST(herm_eigs, known_spectra) {
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto e = herm_eigs(d);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_NEAR(e[0], 1.0, 1e-14);
  EXPECT_NEAR(e[1], 2.0, 1e-14);
  EXPECT_NEAR(e[2], 3.0, 1e-14);

  ComplexMatrix x(2, 2);
  x << 0, 1, 1, 0;
  const auto ex = herm_eigs(x);
  EXPECT_NEAR(ex[0], -1.0, 1e-14);
  EXPECT_NEAR(ex[1], 1.0, 1e-14);
}

TEST(herm_eigs, reconstruction_and_conjugation_invariance) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix h = random_hermitian(5, rng);
    const HermitianEigen eig = herm_eig(h);
    const ComplexMatrix rebuilt = eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
    EXPECT_LE(fro_norm(h - rebuilt), 1e-9 * std::max(1.0, fro_norm(h)));
    for (int k = 1; k < 5; ++k) EXPECT_LE(eig.values(k - 1), eig.values(k));

    const ComplexMatrix u = haar_unitary(5, rng);
    const auto before = herm_eigs(h);
    const auto after = herm_eigs(u * h * u.adjoint());
    for (int k = 0; k < 5; ++k) EXPECT_NEAR(before[k], after[k], 1e-9);
  }
}

TEST(herm_eigs, symmetrizes_within_tolerance_and_rejects_beyond) {
  ComplexMatrix m = identity(2);
  m(0, 1) = Complex(0.0, 5e-11);
  EXPECT_NO_THROW(herm_eigs(m));
  m(0, 1) = 1e-6;
  EXPECT_THROW(herm_eigs(m), ValidationError);
  EXPECT_THROW(herm_eigs(ComplexMatrix::Zero(2, 3)), ShapeError);
}

TEST(herm_eigs, projector_spectrum_is_binary) {
  Rng rng(6);
  const ComplexMatrix u = haar_unitary(6, rng);
  const ComplexMatrix p = u.leftCols(2) * u.leftCols(2).adjoint();
  for (double v : herm_eigs(p)) EXPECT_LE(std::min(std::abs(v), std::abs(v - 1.0)), 1e-9);
}

TEST(norms, closed_forms) {
  EXPECT_NEAR(op_norm(identity(3)), 1.0, 1e-14);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = -2.0;
  d(1, 1) = 1.0;
  EXPECT_NEAR(op_norm(d), 2.0, 1e-14);
  EXPECT_NEAR(fro_norm(identity(2)), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(fro_norm(ComplexMatrix::Zero(3, 3)), 0.0);

  Rng rng(7);
  const ComplexVector u = haar_state(4, rng);
  const ComplexVector v = haar_state(4, rng);
  // |u><v| has entries u_i conj(v_j); sum of squared moduli is |u|^2 |v|^2 = 1.
  double direct = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) direct += std::norm(u(i) * std::conj(v(j)));
  EXPECT_NEAR(direct, 1.0, 1e-14);
  EXPECT_NEAR(fro_norm(u * v.adjoint()), 1.0, 1e-14);
}

TEST(norms, operator_norm_never_exceeds_frobenius) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const ComplexMatrix m = random_matrix(n, n, rng);
    EXPECT_LE(op_norm(m), fro_norm(m) + 1e-12);
    const ComplexMatrix h = random_hermitian(n, rng);
    const auto e = herm_eigs(h);
    EXPECT_NEAR(op_norm(h), std::max(std::abs(e.front()), std::abs(e.back())), 1e-10);
  }
}

TEST(haar_unitary, unitary_and_deterministic) {
  for (int n = 1; n <= 8; ++n) {
    Rng a(100 + n), b(100 + n);
    const ComplexMatrix u = haar_unitary(n, a);
    const ComplexMatrix v = haar_unitary(n, b);
    EXPECT_LE((u.adjoint() * u - identity(n)).norm(), 1e-10);
    EXPECT_EQ(std::memcmp(u.data(), v.data(), sizeof(Complex) * u.size()), 0);
  }
}

TEST(haar_unitary, second_moment) {
  // E|U_ij|^2 = 1/n for Haar U(n).
  Rng rng(9);
  double total = 0.0;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) total += std::norm(haar_unitary(2, rng)(0, 0));
  EXPECT_NEAR(total / samples, 0.5, 0.02);
}

TEST(haar_unitary, phase_distribution_is_uniform) {
  // Without the R-diagonal phase fix the (0,0) phase would be biased; check
  // the first circular moment E[U_00 / |U_00|] vanishes.
  Rng rng(10);
  Complex mean = 0.0;
  const int samples = 10000;
  for (int s = 0; s < samples; ++s) {
    const Complex z = haar_unitary(3, rng)(0, 0);
    mean += z / std::abs(z);
  }
  EXPECT_LE(std::abs(mean / static_cast<double>(samples)), 0.03);
}
