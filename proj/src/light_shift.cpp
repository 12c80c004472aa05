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

#include "ghzsim/light_shift.hpp"

#include <cmath>
#include <map>

namespace ghzsim {

CMatrix light_shift_hamiltonian(const std::vector<double>& static_diag,
                                const std::vector<RotatingDrive>& drives, double delta_min) {
  const int dim = int(static_diag.size());
  CMatrix shift(dim, dim);
  for (const auto& drive : drives) {
    if (drive.matrix.rows() != dim || drive.matrix.cols() != dim)
      throw ConfigError("light_shift_hamiltonian: drive has wrong shape");
    // partition the drive's elements by residual detuning
    std::map<long, CMatrix> channels;
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) {
        const Complex v = drive.matrix(a, b);
        if (v == Complex(0.0)) continue;
        const double delta = static_diag[a] - static_diag[b] + drive.carrier;
        if (std::abs(delta) < delta_min) continue;
        const long key = std::lround(delta * 4096.0);
        auto [it, inserted] = channels.try_emplace(key, dim, dim);
        it->second(a, b) = v;
      }
    // For V_delta e^{i delta t} + H.c. the time-averaged second-order
    // Hamiltonian is -(1/delta)(V^dag V - V V^dag); check: a drive
    // M e^{-i Delta t}|r><g| with Delta = omega_L - omega_0 > 0 (blue)
    // shifts |g> up by M^2/Delta.
    for (auto& [key, v_delta] : channels) {
      const double delta = double(key) / 4096.0;
      const CMatrix vdag = v_delta.dagger();
      shift -= Complex(1.0 / delta) * (vdag * v_delta - v_delta * vdag);
    }
  }
  return shift;
}

}  // namespace ghzsim
