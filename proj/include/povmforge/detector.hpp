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
 * @file detector.hpp
 * @brief Programmable detectors.
 *
 * A detector is a fixed joint POVM {F_i} on system (x) ancilla, with any
 * system-ancilla interaction already absorbed into the effects. Preparing the
 * ancilla in a program state sigma makes the system see the POVM
 *
 *     Q_i = Tr_A[(I (x) sigma) F_i].
 */

#ifndef POVMFORGE_DETECTOR_HPP
#define POVMFORGE_DETECTOR_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "povmforge/povm.hpp"

namespace povmforge {

class Detector {
 public:
  /// Throws ShapeError unless joint.dim() == sys_dim * anc_dim.
  Detector(int sys_dim, int anc_dim, Povm joint);

  int sys_dim() const { return sys_dim_; }
  int anc_dim() const { return anc_dim_; }
  const Povm& joint() const { return joint_; }

 private:
  int sys_dim_;
  int anc_dim_;
  Povm joint_;
};

/// The program map sigma -> {Tr_A[(I (x) sigma) F_i]}. The result is
/// re-validated as a POVM.
Povm program(const Detector& f, const DensityState& sigma);

/**
 * Detector for the controlled-unitary interaction U = sum_k W_k (x) |k><k|
 * followed by the measurement |psi_i><psi_i| (x) I on the system:
 * F_i = U^dag (|psi_i><psi_i| (x) I_d) U. The ancilla dimension is ws.size()
 * and programming with |k><k| yields Q_i = W_k^dag |psi_i><psi_i| W_k.
 *
 * Columns of `basis` are the psi_i.
 */
Detector controlled_unitary_detector(const std::vector<ComplexMatrix>& ws, const ComplexMatrix& basis);

/// Computational-basis program states |k><k|, k = 0..d-1.
std::vector<DensityState> basis_state_programs(int d);

/// povm_distance(target, program(f, sigma)).
double accuracy_for_program(const Detector& f, const Povm& target, const DensityState& sigma);

/// The family of program states searched by estimate_accuracy.
class ProgramStrategy {
 public:
  /// Picks a program for a given target (e.g. the closed-form optimal one).
  using MatchedRule = std::function<DensityState(const Povm& target, std::size_t target_id)>;

  static ProgramStrategy from_states(std::vector<DensityState> states);
  static ProgramStrategy matched(MatchedRule rule);

  bool is_matched() const { return static_cast<bool>(rule_); }
  const std::vector<DensityState>& states() const { return states_; }
  const MatchedRule& rule() const { return rule_; }

 private:
  std::vector<DensityState> states_;
  MatchedRule rule_;
};

struct TargetAccuracy {
  std::size_t target_id = 0;
  double delta = 0.0;
  ComplexMatrix best_program;
};

struct AccuracyReport {
  /// max over targets of the best achieved distance.
  double epsilon = 0.0;
  std::size_t worst_target_id = 0;
  std::vector<TargetAccuracy> per_target;
};

/**
 * Estimates max_P min_sigma delta(P, program(f, sigma)) over the given targets,
 * with sigma ranging over the strategy. An upper estimate of the true max-min
 * whenever the strategy is a strict subset of the ancilla states.
 */
AccuracyReport estimate_accuracy(const Detector& f, std::span<const Povm> targets,
                                 const ProgramStrategy& strategy);

}  // namespace povmforge

#endif  // POVMFORGE_DETECTOR_HPP
