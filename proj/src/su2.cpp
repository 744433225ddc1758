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

#include "povmforge/su2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "povmforge/errors.hpp"

namespace povmforge::su2 {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr double kSpecialUnitaryTol = 1e-10;

ComplexMatrix euler_matrix(double alpha, double beta, double gamma) {
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const Complex i(0.0, 1.0);
  ComplexMatrix u(2, 2);
  u(0, 0) = c * std::exp(-i * 0.5 * (alpha + gamma));
  u(0, 1) = -s * std::exp(-i * 0.5 * (alpha - gamma));
  u(1, 0) = s * std::exp(i * 0.5 * (alpha - gamma));
  u(1, 1) = c * std::exp(i * 0.5 * (alpha + gamma));
  return u;
}

std::array<double, 3> euler_from_matrix(const ComplexMatrix& u) {
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  const double beta = 2.0 * std::atan2(s, c);
  double alpha = 0.0;
  double gamma = 0.0;
  if (s < 1e-12) {
    alpha = -2.0 * std::arg(u(0, 0));
  } else if (c < 1e-12) {
    alpha = 2.0 * std::arg(u(1, 0));
  } else {
    const double sum = -2.0 * std::arg(u(0, 0));
    const double diff = 2.0 * std::arg(u(1, 0));
    alpha = 0.5 * (sum + diff);
    gamma = 0.5 * (sum - diff);
  }
  return {alpha, beta, gamma};
}

Complex ipow(Complex z, int k) {
  Complex out(1.0);
  for (int i = 0; i < k; ++i) out *= z;
  return out;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

double binomial(int n, int k) { return std::round(factorial(n) / (factorial(k) * factorial(n - k))); }

cpp_int big_factorial(int k) {
  cpp_int out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

void require_label(int twice_j, int twice_m, const char* name) {
  if (twice_j < 0 || std::abs(twice_m) > twice_j || (twice_j - twice_m) % 2 != 0) {
    throw ValidationError(std::string("clebsch_gordan: malformed quantum numbers for ") + name + " (2j=" +
                          std::to_string(twice_j) + ", 2m=" + std::to_string(twice_m) + ")");
  }
}

}  // namespace

GroupElement::GroupElement() : matrix_(identity(2)), euler_{0.0, 0.0, 0.0} {}

GroupElement GroupElement::from_euler(double alpha, double beta, double gamma) {
  GroupElement g;
  g.matrix_ = euler_matrix(alpha, beta, gamma);
  g.euler_ = {alpha, beta, gamma};
  return g;
}

GroupElement GroupElement::from_matrix(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, kSpecialUnitaryTol) ||
      std::abs(u.determinant() - Complex(1.0)) > kSpecialUnitaryTol) {
    throw ValidationError("GroupElement: matrix is not in SU(2)");
  }
  GroupElement g;
  g.matrix_ = u;
  g.euler_ = euler_from_matrix(u);
  return g;
}

GroupElement GroupElement::random(Rng& rng) {
  ComplexMatrix u = haar_unitary(2, rng);
  u /= std::sqrt(u.determinant());
  return from_matrix(u);
}

GroupElement GroupElement::operator*(const GroupElement& other) const {
  return from_matrix(matrix_ * other.matrix_);
}

GroupElement GroupElement::inverse() const { return from_matrix(matrix_.adjoint()); }

ComplexMatrix spin_jz(AngularMomentum j) {
  ComplexMatrix jz = ComplexMatrix::Zero(j.dim(), j.dim());
  for (int k = 0; k < j.dim(); ++k) jz(k, k) = j.value() - k;
  return jz;
}

ComplexMatrix spin_jy(AngularMomentum j) {
  // J+ |j,m> = sqrt(j(j+1) - m(m+1)) |j,m+1>; index k holds m = j - k.
  ComplexMatrix jplus = ComplexMatrix::Zero(j.dim(), j.dim());
  const double jj = j.value();
  for (int k = 1; k < j.dim(); ++k) {
    const double m = jj - k;
    jplus(k - 1, k) = std::sqrt(jj * (jj + 1) - m * (m + 1));
  }
  return (jplus - jplus.adjoint()) / Complex(0.0, 2.0);
}

ComplexMatrix irrep_matrix(AngularMomentum j, const GroupElement& g) {
  // |j,m> <-> x^p y^q / sqrt(p! q!) with p = j+m, q = j-m; u sends
  // x -> a x + c y and y -> b x + d y.
  const ComplexMatrix& u = g.matrix();
  const Complex a = u(0, 0), b = u(0, 1), c = u(1, 0), d = u(1, 1);
  const int two_j = j.twice_j;
  const int dim = j.dim();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const int q = col;
    const int p = two_j - q;
    for (int row = 0; row < dim; ++row) {
      const int q_out = row;
      const int p_out = two_j - q_out;
      Complex acc = 0.0;
      for (int k = std::max(0, q_out - q); k <= std::min(p, q_out); ++k) {
        const int l = q_out - k;
        acc += binomial(p, k) * binomial(q, l) * ipow(a, p - k) * ipow(c, k) * ipow(b, q - l) * ipow(d, l);
      }
      out(row, col) = acc * std::sqrt(factorial(p_out) * factorial(q_out) / (factorial(p) * factorial(q)));
    }
  }
  return out;
}

double clebsch_gordan(int twice_j1, int twice_m1, int twice_j2, int twice_m2, int twice_J, int twice_M) {
  require_label(twice_j1, twice_m1, "j1");
  require_label(twice_j2, twice_m2, "j2");
  require_label(twice_J, twice_M, "J");
  if (twice_M != twice_m1 + twice_m2) return 0.0;
  if (twice_J < std::abs(twice_j1 - twice_j2) || twice_J > twice_j1 + twice_j2 ||
      (twice_j1 + twice_j2 + twice_J) % 2 != 0) {
    return 0.0;
  }
  // Integer combinations appearing in the Racah formula.
  const int j1_j2_J = (twice_j1 + twice_j2 - twice_J) / 2;
  const int j1_mj2_J = (twice_j1 - twice_j2 + twice_J) / 2;
  const int mj1_j2_J = (-twice_j1 + twice_j2 + twice_J) / 2;
  const int j1_j2_J_1 = (twice_j1 + twice_j2 + twice_J) / 2 + 1;
  const int j1_pm1 = (twice_j1 + twice_m1) / 2, j1_mm1 = (twice_j1 - twice_m1) / 2;
  const int j2_pm2 = (twice_j2 + twice_m2) / 2, j2_mm2 = (twice_j2 - twice_m2) / 2;
  const int J_pM = (twice_J + twice_M) / 2, J_mM = (twice_J - twice_M) / 2;
  const int shift1 = (twice_J - twice_j2 + twice_m1) / 2;
  const int shift2 = (twice_J - twice_j1 - twice_m2) / 2;

  cpp_rational squared_prefactor(cpp_int(twice_J + 1) * big_factorial(j1_j2_J) * big_factorial(j1_mj2_J) *
                                     big_factorial(mj1_j2_J),
                                 big_factorial(j1_j2_J_1));
  squared_prefactor *= cpp_rational(big_factorial(j1_pm1) * big_factorial(j1_mm1) * big_factorial(j2_pm2) *
                                    big_factorial(j2_mm2) * big_factorial(J_pM) * big_factorial(J_mM));

  cpp_rational sum = 0;
  const int k_min = std::max({0, -shift1, -shift2});
  const int k_max = std::min({j1_j2_J, j1_mm1, j2_pm2});
  for (int k = k_min; k <= k_max; ++k) {
    const cpp_int denom = big_factorial(k) * big_factorial(j1_j2_J - k) * big_factorial(j1_mm1 - k) *
                          big_factorial(j2_pm2 - k) * big_factorial(shift1 + k) * big_factorial(shift2 + k);
    const cpp_rational term(cpp_int(1), denom);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum == 0) return 0.0;
  const cpp_rational squared = squared_prefactor * sum * sum;
  const double magnitude = std::sqrt(squared.convert_to<double>());
  return sum > 0 ? magnitude : -magnitude;
}

int coupled_block_offset(AngularMomentum j1, AngularMomentum j2, AngularMomentum total) {
  const int lo = std::abs(j1.twice_j - j2.twice_j);
  const int hi = j1.twice_j + j2.twice_j;
  if (total.twice_j < lo || total.twice_j > hi || (hi - total.twice_j) % 2 != 0) {
    throw ValidationError("coupled_block_offset: total spin not contained in j1 (x) j2");
  }
  int offset = 0;
  for (int tJ = hi; tJ > total.twice_j; tJ -= 2) offset += tJ + 1;
  return offset;
}

ComplexMatrix coupling_isometry(AngularMomentum j1, AngularMomentum j2) {
  const int d1 = j1.dim();
  const int d2 = j2.dim();
  ComplexMatrix u = ComplexMatrix::Zero(d1 * d2, d1 * d2);
  int row = 0;
  for (int tJ = j1.twice_j + j2.twice_j; tJ >= std::abs(j1.twice_j - j2.twice_j); tJ -= 2) {
    for (int tM = tJ; tM >= -tJ; tM -= 2, ++row) {
      for (int i1 = 0; i1 < d1; ++i1) {
        const int tm1 = j1.twice_j - 2 * i1;
        const int tm2 = tM - tm1;
        if (std::abs(tm2) > j2.twice_j) continue;
        const int i2 = (j2.twice_j - tm2) / 2;
        u(row, i1 * d2 + i2) = clebsch_gordan(j1.twice_j, tm1, j2.twice_j, tm2, tJ, tM);
      }
    }
  }
  return u;
}

ComplexMatrix symmetric_projector(int num_qubits) {
  if (num_qubits < 1) throw ValidationError("symmetric_projector: need at least one qubit");
  if (num_qubits > kMaxSymmetricQubits) {
    throw CapacityError("symmetric_projector: " + std::to_string(num_qubits) + " qubits exceeds the cap of " +
                        std::to_string(kMaxSymmetricQubits));
  }
  // sum_k |D_k><D_k|, with |D_k> the normalized uniform superposition of
  // weight-k basis strings.
  const int dim = 1 << num_qubits;
  std::vector<double> inv_binom(num_qubits + 1);
  for (int k = 0; k <= num_qubits; ++k) inv_binom[k] = 1.0 / binomial(num_qubits, k);
  ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
  for (int x = 0; x < dim; ++x) {
    const int wx = std::popcount(static_cast<unsigned>(x));
    for (int y = 0; y < dim; ++y) {
      if (std::popcount(static_cast<unsigned>(y)) == wx) z(x, y) = inv_binom[wx];
    }
  }
  return z;
}

Detector fiurasek_detector(int num_program_qubits) {
  if (num_program_qubits < 1) throw ValidationError("fiurasek_detector: need at least one program qubit");
  if (num_program_qubits > kMaxFiurasekProgramQubits) {
    throw CapacityError("fiurasek_detector: " + std::to_string(num_program_qubits) +
                        " program qubits exceeds the cap of " + std::to_string(kMaxFiurasekProgramQubits));
  }
  ComplexMatrix z = symmetric_projector(num_program_qubits + 1);
  ComplexMatrix rest = identity(static_cast<int>(z.rows())) - z;
  std::vector<ComplexMatrix> effects;
  effects.push_back(std::move(z));
  effects.push_back(std::move(rest));
  return Detector(2, 1 << num_program_qubits, Povm(std::move(effects)));
}

DensityState fiurasek_program(const ComplexVector& psi, int num_program_qubits) {
  if (psi.size() != 2) throw ShapeError("fiurasek_program: psi must be a qubit state");
  if (num_program_qubits < 1) throw ValidationError("fiurasek_program: need at least one program qubit");
  const ComplexMatrix single = projector(psi / psi.norm());
  ComplexMatrix sigma = single;
  for (int k = 1; k < num_program_qubits; ++k) sigma = tensor(sigma, single);
  return DensityState(std::move(sigma));
}

Detector covariant_qubit_detector(AngularMomentum j) {
  if (j.twice_j < 1) throw ValidationError("covariant_qubit_detector: need j >= 1/2");
  const ComplexMatrix u = coupling_isometry(AngularMomentum::half(), j);
  const int upper = j.twice_j + 2;  // dim of j + 1/2
  const int lower = j.twice_j;      // dim of j - 1/2
  const ComplexMatrix up_rows = u.topRows(upper);
  const ComplexMatrix down_rows = u.bottomRows(lower);
  std::vector<ComplexMatrix> effects;
  effects.push_back(up_rows.adjoint() * up_rows);
  effects.push_back(down_rows.adjoint() * down_rows);
  return Detector(2, j.dim(), Povm(std::move(effects)));
}

DensityState covariant_program(AngularMomentum j, const GroupElement& g) {
  const ComplexVector highest = irrep_matrix(j, g).col(0);
  return DensityState(projector(highest));
}

Povm rotated_qubit_observable(const GroupElement& g) {
  return observable_from_unitary(g.matrix().adjoint());
}

}  // namespace povmforge::su2
