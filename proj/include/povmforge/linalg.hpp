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
 * @file linalg.hpp
 * @brief Dense complex linear algebra used throughout povmforge.
 *
 * Tensor products are ordered system-major: in `tensor(system, ancilla)` the
 * joint index is `s * d + a`, with `s` the system index and `a` the ancilla
 * index. `partial_trace_ancilla` contracts the second (ancilla) factor.
 */

#ifndef POVMFORGE_LINALG_HPP
#define POVMFORGE_LINALG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace povmforge {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr double kTraceTol = 1e-9;

/**
 * Seeded pseudo-random source. Every random quantity in the library is drawn
 * from an explicitly passed Rng; identical seeds replay identical streams.
 *
 * Rng is single-owner. Use fork() to hand an independent stream to another
 * task.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  Rng(const Rng&) = delete;
  Rng& operator=(const Rng&) = delete;
  Rng(Rng&&) noexcept = default;
  Rng& operator=(Rng&&) noexcept = default;

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal via Box-Muller; platform independent.
  double normal();
  /// Child generator seeded from this stream (advances this stream by one draw).
  Rng fork();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Sub-seed derivation (splitmix64 finalizer), used for per-row / per-target streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

ComplexMatrix identity(int n);

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr_A of an (n*d) x (n*d) operator with system-major indexing.
ComplexMatrix partial_trace_ancilla(const ComplexMatrix& m, int n, int d);

/// |v><v|
ComplexMatrix projector(const ComplexVector& v);

/// Largest |m(i,j) - conj(m(j,i))|.
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol);
bool all_finite(const ComplexMatrix& m);

/// Throws ValidationError (naming `what`) unless m is square and unitary.
void require_unitary(const ComplexMatrix& m, std::string_view what);

struct HermitianEigen {
  Eigen::VectorXd values;   // ascending
  ComplexMatrix vectors;    // columns are eigenvectors
};

/// Spectral decomposition of a Hermitian matrix. Inputs within kHermitianTol
/// are symmetrized before solving; anything further off is rejected.
HermitianEigen herm_eig(const ComplexMatrix& m);
std::vector<double> herm_eigs(const ComplexMatrix& m);

/// Largest singular value.
double op_norm(const ComplexMatrix& m);
double fro_norm(const ComplexMatrix& m);

/// Haar-distributed n x n unitary (QR of a complex Ginibre matrix with the
/// phases of R's diagonal folded back into Q).
ComplexMatrix haar_unitary(int n, Rng& rng);

/// Haar-random unit vector in C^n.
ComplexVector haar_state(int n, Rng& rng);

}  // namespace povmforge

#endif  // POVMFORGE_LINALG_HPP
