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

#include "povmforge/detector.hpp"

#include <limits>
#include <string>

#include "povmforge/errors.hpp"

namespace povmforge {

Detector::Detector(int sys_dim, int anc_dim, Povm joint)
    : sys_dim_(sys_dim), anc_dim_(anc_dim), joint_(std::move(joint)) {
  if (sys_dim < 1 || anc_dim < 1 || joint_.dim() != sys_dim * anc_dim) {
    throw ShapeError("Detector: joint POVM dimension " + std::to_string(joint_.dim()) +
                     " does not equal " + std::to_string(sys_dim) + " * " + std::to_string(anc_dim));
  }
}

Povm program(const Detector& f, const DensityState& sigma) {
  const int n = f.sys_dim();
  const int d = f.anc_dim();
  if (sigma.dim() != d) throw ShapeError("program: program state dimension differs from ancilla");
  const ComplexMatrix& s = sigma.matrix();
  std::vector<ComplexMatrix> effects;
  effects.reserve(f.joint().size());
  // Tr_A[(I (x) sigma) F](i, j) = sum_{a,b} sigma(a, b) F(i*d + b, j*d + a)
  for (const ComplexMatrix& joint : f.joint().effects()) {
    ComplexMatrix q(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        q(i, j) = s.cwiseProduct(joint.block(i * d, j * d, d, d).transpose()).sum();
      }
    }
    effects.push_back(std::move(q));
  }
  return Povm(std::move(effects));
}

Detector controlled_unitary_detector(const std::vector<ComplexMatrix>& ws, const ComplexMatrix& basis) {
  if (ws.empty()) throw ValidationError("controlled_unitary_detector: no unitaries");
  const int n = static_cast<int>(basis.rows());
  require_unitary(basis, "controlled_unitary_detector: basis");
  for (std::size_t k = 0; k < ws.size(); ++k) {
    if (ws[k].rows() != n || ws[k].cols() != n) {
      throw ShapeError("controlled_unitary_detector: W_" + std::to_string(k) + " has the wrong shape");
    }
    require_unitary(ws[k], "controlled_unitary_detector: W_" + std::to_string(k));
  }
  const int d = static_cast<int>(ws.size());
  // U is block diagonal in the ancilla index, so F_i is too: its (a, a) block
  // is W_a^dag |psi_i><psi_i| W_a.
  std::vector<ComplexMatrix> effects;
  effects.reserve(n);
  for (int i = 0; i < n; ++i) {
    ComplexMatrix f = ComplexMatrix::Zero(n * d, n * d);
    for (int a = 0; a < d; ++a) {
      const ComplexVector rotated = ws[a].adjoint() * basis.col(i);
      const ComplexMatrix block = projector(rotated);
      for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) f(s * d + a, t * d + a) = block(s, t);
      }
    }
    effects.push_back(std::move(f));
  }
  return Detector(n, d, Povm(std::move(effects)));
}

std::vector<DensityState> basis_state_programs(int d) {
  std::vector<DensityState> states;
  states.reserve(d);
  for (int k = 0; k < d; ++k) states.push_back(DensityState::pure(ComplexVector::Unit(d, k)));
  return states;
}

double accuracy_for_program(const Detector& f, const Povm& target, const DensityState& sigma) {
  return povm_distance(target, program(f, sigma));
}

ProgramStrategy ProgramStrategy::from_states(std::vector<DensityState> states) {
  if (states.empty()) throw ValidationError("ProgramStrategy: empty state list");
  ProgramStrategy strategy;
  strategy.states_ = std::move(states);
  return strategy;
}

ProgramStrategy ProgramStrategy::matched(MatchedRule rule) {
  if (!rule) throw ValidationError("ProgramStrategy: empty matched rule");
  ProgramStrategy strategy;
  strategy.rule_ = std::move(rule);
  return strategy;
}

AccuracyReport estimate_accuracy(const Detector& f, std::span<const Povm> targets,
                                 const ProgramStrategy& strategy) {
  if (targets.empty()) throw ValidationError("estimate_accuracy: no targets");

  // Programmed POVMs of a fixed list do not depend on the target.
  std::vector<Povm> programmed;
  if (!strategy.is_matched()) {
    programmed.reserve(strategy.states().size());
    for (const auto& sigma : strategy.states()) programmed.push_back(program(f, sigma));
  }

  AccuracyReport report;
  report.epsilon = -std::numeric_limits<double>::infinity();
  report.per_target.reserve(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    TargetAccuracy entry;
    entry.target_id = t;
    if (strategy.is_matched()) {
      DensityState sigma = strategy.rule()(targets[t], t);
      entry.delta = accuracy_for_program(f, targets[t], sigma);
      entry.best_program = sigma.matrix();
    } else {
      entry.delta = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < programmed.size(); ++k) {
        const double delta = povm_distance(targets[t], programmed[k]);
        if (delta < entry.delta) {
          entry.delta = delta;
          entry.best_program = strategy.states()[k].matrix();
        }
      }
    }
    if (entry.delta > report.epsilon) {
      report.epsilon = entry.delta;
      report.worst_target_id = t;
    }
    report.per_target.push_back(std::move(entry));
  }
  return report;
}

}  // namespace povmforge
