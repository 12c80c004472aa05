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
#include <vector>

#include "ghzsim/cmatrix.hpp"
#include "ghzsim/envelope.hpp"

namespace ghzsim {

/// One Hamiltonian drive term: envelope(t) * matrix. With add_conjugate set,
/// the Hermitian-conjugate term conj(envelope(t)) * matrix^dagger is implied.
/// Without it, the matrix must be Hermitian and the envelope real-valued.
struct HTerm {
  CMatrix matrix;
  Envelope envelope = Envelope::constant();
  bool add_conjugate = false;
};

/// One jump operator with sqrt(rate) absorbed into L. Contributes
/// L rho L^dag - (1/2){L^dag L, rho}; traceless for any rho.
struct Dissipator {
  CMatrix jump;
};

/// Dimension + Hamiltonian term list + dissipator list: the simulable object.
struct MasterEq {
  int dim = 0;
  std::vector<HTerm> hterms;
  std::vector<Dissipator> dissipators;
  std::string label;

  /// Largest angular frequency among envelopes and static eigenvalue
  /// spreads, reported by the builder; used for the default-step rule.
  double f_max = 0.0;

  /// Optional diagonal frame generator omega_i. When non-empty, observables
  /// are evaluated on exp(+i D t) rho exp(-i D t) with D = diag(omega): the
  /// frame in which the model's target coherences are static. Trace,
  /// Hermiticity and positivity diagnostics are frame-invariant.
  std::vector<double> observable_frame;

  bool time_independent() const;
  void validate() const;  // shape and Hermiticity checks, throws ConfigError

  /// H(t) assembled dense, conjugate terms included.
  CMatrix hamiltonian(double t) const;
  /// Sum_j L_j^dag L_j assembled dense.
  CMatrix dissipator_gram() const;
};

/// Piecewise activation of master equations over time. segments lists one
/// period; the whole period repeats `repeats` times.
struct Schedule {
  struct Segment {
    double duration = 0.0;
    int model = 0;  // index into models
  };

  std::vector<MasterEq> models;
  std::vector<Segment> segments;
  int repeats = 1;
  std::string label;

  double total_time() const;
  void validate() const;
};

/// Sampled observable values over simulation time, with the integrator's
/// final diagnostics attached.
struct TimeSeries {
  std::vector<double> times;
  std::vector<std::string> labels;
  std::vector<std::vector<double>> columns;  // columns[k][i], one per label

  double max_trace_drift = 0.0;
  double max_hermiticity_drift = 0.0;
  CMatrix final_state;

  size_t n_samples() const { return times.size(); }
  const std::vector<double>& column(const std::string& label) const;
};

}  // namespace ghzsim
