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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ghzsim/master_eq.hpp"

namespace ghzsim {

/// Named quantity sampled along a trajectory: the population <psi|rho|psi>
/// of a pure state (optionally reported as its square root, i.e. the pure
/// state fidelity), or the expectation Re tr(M rho) of a Hermitian operator.
struct Observable {
  std::string label;
  CVector state;           // pure-state flavor when non-empty
  CMatrix matrix;          // operator flavor otherwise
  bool report_sqrt = false;

  static Observable population(std::string label, CVector state);
  static Observable fidelity(std::string label, CVector state);
  static Observable expectation(std::string label, CMatrix m);

  double evaluate(const CMatrix& rho, double t, const std::vector<double>& frame) const;
};

/// Hook invoked at every sampled instant; used by tests to inspect states
/// (e.g. positivity checks) without storing the whole trajectory.
using SampleHook = std::function<void(double t, const CMatrix& rho)>;

struct IntegrateOptions {
  double t_start = 0.0;
  /// Abort threshold for |tr rho - 1| during propagation.
  double trace_tol = 1e-6;
  /// Skip the rho0 validity check (used by the schedule driver for legs
  /// that resume from a previous endpoint).
  bool skip_initial_check = false;
  SampleHook on_sample;
};

/// Lindblad right-hand side at time t:
/// -i[H(t), rho] + sum_j L_j rho L_j^dag - (1/2){L_j^dag L_j, rho}.
CMatrix rhs(const MasterEq& me, const CMatrix& rho, double t);

/// Classical fixed-step RK4 propagation of a master equation. Observables
/// are sampled every sample_stride steps and at the final instant; dt <= 0
/// selects the default step 0.05 / f_max; sample_stride <= 0 targets about
/// 2000 samples. The last step is shortened to land exactly on t_end.
TimeSeries integrate(const MasterEq& me, const CMatrix& rho0, double t_end, double dt,
                     const std::vector<Observable>& observables, int sample_stride = 0,
                     const IntegrateOptions& opts = {});

/// Same, driving a switching schedule; steps snap to segment boundaries so
/// switching times are exact. t_end may be shorter than the schedule total.
TimeSeries integrate(const Schedule& schedule, const CMatrix& rho0, double t_end, double dt,
                     const std::vector<Observable>& observables, int sample_stride = 0,
                     const IntegrateOptions& opts = {});

/// Re <psi|rho|psi>; throws NumericalError when the imaginary part exceeds 1e-10.
double population(const CMatrix& rho, const CVector& state);

/// Uhlmann fidelity against a pure target: sqrt(<psi|rho|psi>). Throws
/// NumericalError when the population is below -1e-10.
double fidelity(const CMatrix& rho, const CVector& target);

struct StateDiagnostics {
  double trace_error = 0.0;        // |tr rho - 1|
  double hermiticity_error = 0.0;  // max |rho - rho^dag|
  double min_eigenvalue = 0.0;
  bool ok = true;                  // all three within the requested tolerance
};

/// Pure report: trace, Hermiticity and spectral floor of a density matrix.
StateDiagnostics check_state(const CMatrix& rho, double tol);

/// Cheap positivity test: true iff min eig(rho) >= -tol (Cholesky-based,
/// falls back to an exact eigensolve near the boundary).
bool is_positive_semidefinite(const CMatrix& rho, double tol);

}  // namespace ghzsim
