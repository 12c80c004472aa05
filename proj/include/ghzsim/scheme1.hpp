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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghzsim/master_eq.hpp"

namespace ghzsim::scheme1 {

/// Gaussian modulation replacing the constant drives Omega_1 and Omega_3.
struct GaussianPulse {
  double amp = 0.0;     // Omega'
  double center = 0.0;  // mu
  double width = 1.0;   // sigma

  bool operator==(const GaussianPulse&) const = default;
};

/// Parameters of the polychromatic-drive protocol, in units of the reference
/// rate omega2. Detunings left at 0 are filled from the protocol's resonance
/// conditions: delta2 = U, delta3 = 2U - delta1, and delta1 = 2*omega2 for
/// three atoms or (1 + sqrt 5)*omega2 for five.
struct Scheme1Params {
  int n_atoms = 3;
  double omega0 = 0.0;
  double omega1 = 0.0;
  double omega2 = 1.0;
  double omega3 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta3 = 0.0;
  double interaction_u = 0.0;  // U
  double gamma_e = 0.0;        // decay rate of the short-lived level
  double gamma_r = 0.0;        // optional Rydberg decay rate
  std::optional<double> gamma_eff_direct;  // engineered rate given directly
  std::optional<GaussianPulse> pulse;
  bool constraints_overridden = false;
  /// Cancel the drives' interaction-scale light shifts in the full model
  /// (the level shimming the protocol assumes; off simulates the bare drives).
  bool stark_compensation = true;

  bool operator==(const Scheme1Params&) const = default;

  /// delta1 pinned by the resonant spectrum for this atom count.
  double resonant_delta1() const;
  void fill_defaults();
  /// Throws ConfigError naming the violated field unless overridden.
  void validate() const;
  /// Engineered decay rate: gamma_eff_direct, or 4 omega0^2 / gamma_e.
  double gamma_eff() const;
};

/// Full three-atom master equation with the short-lived level: levels
/// (g, e, r), dim 27. Polychromatic drives Omega_alpha e^{-i delta_alpha t},
/// resonant Omega_0 coupling, all-pairs interaction U, decay sqrt(gamma_e)
/// |g><e| per atom and, when gamma_r > 0, sqrt(gamma_r) |g><r|. Reports the
/// frame (diagonal of the interaction) in which GHZ coherences are static.
MasterEq build_full_3atom(const Scheme1Params& p);

/// Interaction-picture effective model on (g, r) for 3 or 5 atoms: for each
/// site and neighbor occupancies (m, n) a drive Omega_{m+n+1} with envelope
/// e^{i (m+n-1) delta1 t}, plus the engineered dissipators
/// sqrt(gamma_eff) P^0 sigma^{gr} P^0 on a ring.
MasterEq build_effective(const Scheme1Params& p);

/// Time-independent collective-basis model on dim 8: sqrt(3) Omega
/// |GHZ+><E1+| + H.c. plus the omega2 diagonal on E2/E3, with the three
/// engineered dissipators. Requires omega1 == omega3.
MasterEq build_collective_model(const Scheme1Params& p);

/// Named collective vectors in the 2^n (g, r) basis: GHZ+/- for n in {3, 5},
/// plus E1..E3 +/- for n = 3.
std::vector<std::pair<std::string, CVector>> collective_states(int n_atoms);
CVector collective_state(int n_atoms, const std::string& name);

/// Eigenvalues (ascending) of the static mixed-neighbor part of the drive
/// Hamiltonian; delta1 is chosen from this spectrum.
std::vector<double> resonant_spectrum(int n_atoms, double omega2);

struct GammaEffFit {
  double fitted = 0.0;
  double closed_form = 0.0;  // 4 omega0^2 / gamma_e
};

/// Integrates the exact single-atom (g, e, r) model from rho = |r><r| and
/// fits the log-slope of P_r over the window P_r in [0.2, 0.8]; the
/// independent check of the adiabatic-elimination rate. Requires
/// gamma_e >= 5 omega0 unless allow_outside_regime.
GammaEffFit gamma_eff_oracle(double omega0, double gamma_e, double t_end,
                             bool allow_outside_regime = false);

/// Uniform mixture of the 2^n classical (g/r) product states, embedded in a
/// local dimension d (d = 3 places them in the full model's basis with the
/// short-lived level unpopulated; d = 2 in the effective basis).
CMatrix mixed_initial_state(int n_atoms, int local_dim);

}  // namespace ghzsim::scheme1
