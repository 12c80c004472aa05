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

#include "ghzsim/master_eq.hpp"

namespace ghzsim {

struct SteadyStateResult {
  CMatrix rho;
  /// |lambda| of the Liouvillian eigenvalue closest to zero (the null mode).
  double lambda_null = 0.0;
  /// |lambda| of the next-closest eigenvalue; the uniqueness margin.
  double lambda_second = 0.0;
};

/// Dense dim^2 x dim^2 Liouvillian of a time-independent master equation,
/// acting on row-major vectorized density matrices.
CMatrix liouvillian_matrix(const MasterEq& me);

/// Steady state via the Liouvillian null space: the eigenvector whose
/// eigenvalue is nearest zero (|lambda| <= 1e-8), reshaped, Hermitized and
/// trace-normalized. Refuses dim > 32 (use long-time integration there) and
/// time-dependent models. Throws NonUniqueSteadyState when a second
/// eigenvalue also lies within 1e-8 of zero.
SteadyStateResult steady_state(const MasterEq& me);

}  // namespace ghzsim
