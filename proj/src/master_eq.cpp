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

#include "ghzsim/master_eq.hpp"

#include <algorithm>

namespace ghzsim {

bool MasterEq::time_independent() const {
  return std::all_of(hterms.begin(), hterms.end(),
                     [](const HTerm& h) { return h.envelope.is_constant(); });
}

void MasterEq::validate() const {
  if (dim <= 0) throw ConfigError("MasterEq: dimension must be positive");
  for (const auto& h : hterms) {
    if (h.matrix.rows() != dim || h.matrix.cols() != dim)
      throw ConfigError("MasterEq '" + label + "': Hamiltonian term has wrong shape");
    if (!h.add_conjugate) {
      if (!h.matrix.is_hermitian(1e-12))
        throw ConfigError("MasterEq '" + label +
                          "': term without implied conjugate must be Hermitian");
      if (!h.envelope.is_real())
        throw ConfigError("MasterEq '" + label +
                          "': term without implied conjugate must have a real envelope");
    }
  }
  for (const auto& d : dissipators) {
    if (d.jump.rows() != dim || d.jump.cols() != dim)
      throw ConfigError("MasterEq '" + label + "': jump operator has wrong shape");
  }
  if (!observable_frame.empty() && int(observable_frame.size()) != dim)
    throw ConfigError("MasterEq '" + label + "': observable frame has wrong length");
}

CMatrix MasterEq::hamiltonian(double t) const {
  CMatrix h(dim, dim);
  for (const auto& term : hterms) {
    const Complex c = term.envelope(t);
    h += c * term.matrix;
    if (term.add_conjugate) h += std::conj(c) * term.matrix.dagger();
  }
  return h;
}

CMatrix MasterEq::dissipator_gram() const {
  CMatrix g(dim, dim);
  for (const auto& d : dissipators) g += d.jump.dagger() * d.jump;
  return g;
}

double Schedule::total_time() const {
  double per_period = 0.0;
  for (const auto& s : segments) per_period += s.duration;
  return per_period * repeats;
}

void Schedule::validate() const {
  if (models.empty()) throw ConfigError("Schedule: no models");
  if (segments.empty()) throw ConfigError("Schedule: no segments");
  if (repeats < 1) throw ConfigError("Schedule: repeats must be >= 1");
  const int dim = models.front().dim;
  for (const auto& m : models) {
    m.validate();
    if (m.dim != dim) throw ConfigError("Schedule: models have mismatched dimensions");
  }
  for (const auto& s : segments) {
    if (s.duration <= 0.0) throw ConfigError("Schedule: segment durations must be positive");
    if (s.model < 0 || s.model >= int(models.size()))
      throw ConfigError("Schedule: segment references unknown model");
  }
}

const std::vector<double>& TimeSeries::column(const std::string& label) const {
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return columns[k];
  throw ConfigError("TimeSeries: no column labelled '" + label + "'");
}

}  // namespace ghzsim
