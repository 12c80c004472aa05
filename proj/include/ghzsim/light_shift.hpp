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

#include <utility>
#include <vector>

#include "ghzsim/cmatrix.hpp"

namespace ghzsim {

/// One rotating drive: matrix * e^{i carrier t} (+ implied H.c.).
struct RotatingDrive {
  CMatrix matrix;
  double carrier = 0.0;  // signed angular frequency of the envelope
};

/// Second-order dressed-energy structure of far-detuned drive channels.
///
/// Each matrix element of a drive connects basis states whose static-energy
/// mismatch, together with the carrier, leaves a residual detuning delta.
/// Channels with |delta| >= delta_min (the interaction-scale, off-resonant
/// classes) contribute sum_delta (1/delta)(V_delta^dag V_delta -
/// V_delta V_delta^dag); channels below delta_min are the protocol's working
/// transitions and are left untouched. The full-model builders subtract this
/// matrix, implementing the level-shimming the protocols assume.
CMatrix light_shift_hamiltonian(const std::vector<double>& static_diag,
                                const std::vector<RotatingDrive>& drives, double delta_min);

}  // namespace ghzsim
