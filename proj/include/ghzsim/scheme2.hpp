// Copyright 2026 The ghzsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ghzsim/master_eq.hpp"

namespace ghzsim::scheme2 {

/// Parameters of the switching URP + antiblockade protocol, in units of the
/// reference rate omega_b. Resonance conditions: u_rr = delta1 (URP) and
/// u_pp = delta2 (antiblockade); both filled when left at 0.
struct Scheme2Params {
  double omega_a = 0.0;
  double omega_b = 1.0;
  double omega_p = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double u_rr = 0.0;
  double u_pp = 0.0;
  double gamma = 0.0;      // shared Rydberg decay rate (gamma_r = gamma_p)
  int switch_count = 1;    // N
  double total_time = 0.0; // T_total
  bool constraints_overridden = false;
  /// Cancel the drives' interaction-scale light shifts in the full model
  /// (the ancillary-level shimming the protocol assumes).
  bool stark_compensation = true;

  bool operator==(const Scheme2Params&) const = default;

  void fill_defaults();
  void validate() const;  // throws ConfigError naming the violated field
};

enum class ModelKind { Full, Effective };

/// Full four-level master equation for one switching step (dim 64): the
/// dichromatic drive (omega_a resonant + omega_b at -delta1) on |r><0|
/// (step 1) or |r><1| (step 2), the continuous antiblockade drive
/// sqrt(2) omega_p |p><+| at -delta2, static all-pairs u_rr and u_pp
/// interactions, and the four sqrt(gamma/2) decay channels per atom.
MasterEq build_step_full(const Scheme2Params& p, int step);

/// Time-independent effective model for one step: the step's
/// ground-state-selective pumping term, the third-order antiblockade
/// coupling |+++><ppp|, and the full decay channel set.
MasterEq build_step_effective(const Scheme2Params& p, int step);

/// N equal segments of total_time / N alternating step 1, step 2, ...,
/// starting with step 1; the antiblockade drive is present in every segment.
Schedule build_switching_schedule(const Scheme2Params& p, ModelKind kind);

/// Named collective vectors in the dim-64 basis: D1, D2, T1..T3, D+/-,
/// T1..T3 +/-, S1, S2, +++, ppp, GHZ+/-.
std::vector<std::pair<std::string, CVector>> collective_basis_s2();
CVector collective_state_s2(const std::string& name);

struct DecompositionCheck {
  std::string name;
  double expected = 0.0;
  double actual = 0.0;
};

struct DecompositionReport {
  std::vector<DecompositionCheck> checks;
  double max_abs_deviation = 0.0;
};

/// Builds the static part of the step-1 drive in the interaction-rotated
/// frame and compares its matrix elements against the collective-basis
/// coefficients (sqrt(3) omega_a, 2 omega_b, sqrt(2) omega_a/b, and the
/// +/-2 omega_b, +/-sqrt(2) omega_b diagonal after diagonalizing the
/// omega_b part).
DecompositionReport verify_hs1_decomposition(const Scheme2Params& p);

/// Third-order antiblockade rate 12 sqrt(2) omega_p^3 / delta2^2.
double antiblockade_rate(double omega_p, double delta2);

/// Uniform mixture of the six one- and two-excitation ground product states.
CMatrix mixed_initial_state_6();

}  // namespace ghzsim::scheme2
