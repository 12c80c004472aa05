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

#include "ghzsim/scheme2.hpp"

#include <cmath>

#include "ghzsim/light_shift.hpp"
#include "ghzsim/operators.hpp"

namespace ghzsim::scheme2 {

namespace {

constexpr int kAtoms = 3;
constexpr int kDim = 64;
constexpr double kConstraintTol = 1e-9;

const LevelScheme& levels() {
  static const LevelScheme lv = LevelScheme::scheme2();
  return lv;
}

CVector basis_vec(int idx) {
  CVector v(kDim, 0.0);
  v[idx] = 1.0;
  return v;
}

int word(const std::string& w) { return levels().product_index(w, kAtoms); }

CVector word_vec(const std::string& w) { return basis_vec(word(w)); }

// Symmetric combination of product words with coefficients, normalized.
CVector combo(const std::vector<std::pair<std::string, double>>& terms) {
  CVector v(kDim, 0.0);
  for (const auto& [w, c] : terms) v[word(w)] += c;
  return normalized(std::move(v));
}

// |+>^3 in the dim-64 basis.
CVector plus_plus_plus() {
  CVector v(kDim, 0.0);
  for (int bits = 0; bits < 8; ++bits) {
    std::vector<int> digits(kAtoms);
    for (int j = 0; j < kAtoms; ++j) digits[j] = (bits >> (kAtoms - 1 - j)) & 1;
    v[pack_index(digits, 4)] = 1.0 / (2.0 * std::sqrt(2.0));
  }
  return v;
}

// All twelve sqrt(gamma/2) decay channels |0><r|, |1><r|, |0><p|, |1><p|.
void add_decay_channels(MasterEq& me, double gamma) {
  const int q0 = levels().index_of("0"), q1 = levels().index_of("1");
  const int r = levels().index_of("r"), pp = levels().index_of("p");
  const double amp = std::sqrt(gamma / 2.0);
  for (int j = 0; j < kAtoms; ++j) {
    for (int upper : {r, pp}) {
      for (int lower : {q0, q1}) {
        me.dissipators.push_back({amp * embed_site(matrix_unit(4, lower, upper), j, kAtoms)});
      }
    }
  }
}

}  // namespace

void Scheme2Params::fill_defaults() {
  if (u_rr == 0.0) u_rr = delta1;
  if (u_pp == 0.0) u_pp = delta2;
}

void Scheme2Params::validate() const {
  for (auto [v, name] : {std::pair{omega_a, "omega_a"}, {omega_b, "omega_b"},
                         {omega_p, "omega_p"}, {gamma, "gamma"}}) {
    if (v < 0.0) throw ConfigError(std::string("scheme2 parameters: ") + name + " must be >= 0");
  }
  if (switch_count < 1) throw ConfigError("scheme2 parameters: N must be >= 1");
  if (constraints_overridden) return;
  if (std::abs(u_rr - delta1) > kConstraintTol)
    throw ConfigError("scheme2 parameters: u_rr violates u_rr = delta1 "
                      "(set override_constraints to accept)");
  if (std::abs(u_pp - delta2) > kConstraintTol)
    throw ConfigError("scheme2 parameters: u_pp violates u_pp = delta2 "
                      "(set override_constraints to accept)");
}

MasterEq build_step_full(const Scheme2Params& p, int step) {
  p.validate();
  if (step != 1 && step != 2) throw ConfigError("build_step_full: step must be 1 or 2");
  MasterEq me;
  me.dim = kDim;
  me.label = "scheme2_full_step" + std::to_string(step);

  const int q0 = levels().index_of("0"), q1 = levels().index_of("1");
  const int r = levels().index_of("r"), pp = levels().index_of("p");
  const int ground = step == 1 ? q0 : q1;

  std::vector<RotatingDrive> drives;
  for (int j = 0; j < kAtoms; ++j) {
    const CMatrix raise = embed_site(matrix_unit(4, r, ground), j, kAtoms);
    me.hterms.push_back({Complex(p.omega_a) * raise, Envelope::constant(), true});
    me.hterms.push_back({Complex(p.omega_b) * raise, Envelope::complex_exp(-p.delta1), true});
    drives.push_back({Complex(p.omega_a) * raise, 0.0});
    drives.push_back({Complex(p.omega_b) * raise, -p.delta1});
    // sqrt(2) omega_p |p><+| = omega_p (|p><0| + |p><1|)
    const CMatrix pump = Complex(p.omega_p) * (embed_site(matrix_unit(4, pp, q0), j, kAtoms) +
                                               embed_site(matrix_unit(4, pp, q1), j, kAtoms));
    me.hterms.push_back({pump, Envelope::complex_exp(-p.delta2), true});
    drives.push_back({pump, -p.delta2});
  }

  CMatrix interaction(kDim, kDim);
  std::vector<double> static_diag(kDim, 0.0);
  for (int s = 0; s < kDim; ++s) {
    const auto digits = unpack_index(s, 4, kAtoms);
    int r_pairs = 0, p_pairs = 0;
    for (int j = 0; j < kAtoms; ++j)
      for (int k = j + 1; k < kAtoms; ++k) {
        if (digits[j] == r && digits[k] == r) ++r_pairs;
        if (digits[j] == pp && digits[k] == pp) ++p_pairs;
      }
    interaction(s, s) = p.u_rr * r_pairs + p.u_pp * p_pairs;
    static_diag[s] = p.u_rr * r_pairs + p.u_pp * p_pairs;
  }
  me.hterms.push_back({std::move(interaction), Envelope::constant(), false});

  if (p.stark_compensation && p.delta1 > 0.0 && p.delta2 > 0.0) {
    // Shim away the cross-class dressed-energy structure (detunings at the
    // delta1/delta2 scale); the resonant pumping channels stay untouched.
    CMatrix shim = Complex(-1.0) * light_shift_hamiltonian(
                                       static_diag, drives, 0.5 * std::min(p.delta1, p.delta2));
    if (shim.max_abs() > 0.0)
      me.hterms.push_back({std::move(shim), Envelope::constant(), false});
  }

  add_decay_channels(me, p.gamma);
  me.f_max = std::max({p.delta1, p.delta2, p.u_rr, p.u_pp});
  me.validate();
  return me;
}

MasterEq build_step_effective(const Scheme2Params& p, int step) {
  p.validate();
  if (step != 1 && step != 2) throw ConfigError("build_step_effective: step must be 1 or 2");
  MasterEq me;
  me.dim = kDim;
  me.label = "scheme2_effective_step" + std::to_string(step);

  CMatrix urp(kDim, kDim);
  if (step == 1) {
    urp += CMatrix::outer(word_vec("110"), word_vec("11r"));
    urp += CMatrix::outer(word_vec("101"), word_vec("1r1"));
    urp += CMatrix::outer(word_vec("011"), word_vec("r11"));
  } else {
    urp += CMatrix::outer(word_vec("100"), word_vec("r00"));
    urp += CMatrix::outer(word_vec("010"), word_vec("0r0"));
    urp += CMatrix::outer(word_vec("001"), word_vec("00r"));
  }
  me.hterms.push_back({Complex(p.omega_a) * urp, Envelope::constant(), true});

  double pump_rate = 0.0;
  if (p.omega_p > 0.0) {
    pump_rate = antiblockade_rate(p.omega_p, p.delta2);
    // The three-photon channel drives |+++> to the triply excited state of
    // the antiblockade transition's Rydberg level (the p manifold).
    const CMatrix pump = CMatrix::outer(plus_plus_plus(), word_vec("ppp"));
    me.hterms.push_back({Complex(pump_rate) * pump, Envelope::constant(), true});
  }

  add_decay_channels(me, p.gamma);
  me.f_max = std::max({p.omega_a, pump_rate, p.gamma});
  me.validate();
  return me;
}

Schedule build_switching_schedule(const Scheme2Params& p, ModelKind kind) {
  p.validate();
  if (p.total_time <= 0.0)
    throw ConfigError("build_switching_schedule: total_time must be positive");
  Schedule s;
  s.label = kind == ModelKind::Full ? "scheme2_full_switching" : "scheme2_effective_switching";
  if (kind == ModelKind::Full) {
    s.models = {build_step_full(p, 1), build_step_full(p, 2)};
  } else {
    s.models = {build_step_effective(p, 1), build_step_effective(p, 2)};
  }
  const double seg = p.total_time / p.switch_count;
  if (p.switch_count % 2 == 0) {
    s.segments = {{seg, 0}, {seg, 1}};
    s.repeats = p.switch_count / 2;
  } else {
    for (int k = 0; k < p.switch_count; ++k) s.segments.push_back({seg, k % 2});
    s.repeats = 1;
  }
  s.validate();
  return s;
}

std::vector<std::pair<std::string, CVector>> collective_basis_s2() {
  std::vector<std::pair<std::string, CVector>> out;
  out.emplace_back("D1", combo({{"00r", 1}, {"0r0", 1}, {"r00", 1}}));
  out.emplace_back("D2", combo({{"0rr", 1}, {"r0r", 1}, {"rr0", 1}}));
  out.emplace_back("T1", combo({{"10r", 1}, {"1r0", 1}}));
  out.emplace_back("T2", combo({{"01r", 1}, {"r10", 1}}));
  out.emplace_back("T3", combo({{"0r1", 1}, {"r01", 1}}));
  for (double s : {+1.0, -1.0}) {
    const char tag = s > 0 ? '+' : '-';
    out.emplace_back(std::string("D") + tag,
                     combo({{"00r", 1}, {"0r0", 1}, {"r00", 1},
                            {"0rr", s}, {"r0r", s}, {"rr0", s}}));
    out.emplace_back(std::string("T1") + tag, combo({{"10r", 1}, {"1r0", 1}, {"1rr", s * std::sqrt(2.0)}}));
    out.emplace_back(std::string("T2") + tag, combo({{"01r", 1}, {"r10", 1}, {"r1r", s * std::sqrt(2.0)}}));
    out.emplace_back(std::string("T3") + tag, combo({{"0r1", 1}, {"r01", 1}, {"rr1", s * std::sqrt(2.0)}}));
  }
  out.emplace_back("S1", combo({{"00p", 1}, {"01p", 1}, {"10p", 1}, {"11p", 1},
                                {"0p0", 1}, {"0p1", 1}, {"1p0", 1}, {"1p1", 1},
                                {"p00", 1}, {"p01", 1}, {"p10", 1}, {"p11", 1}}));
  out.emplace_back("S2", combo({{"0pp", 1}, {"1pp", 1}, {"p0p", 1}, {"p1p", 1},
                                {"pp0", 1}, {"pp1", 1}}));
  out.emplace_back("+++", plus_plus_plus());
  out.emplace_back("ppp", word_vec("ppp"));
  out.emplace_back("GHZ+", combo({{"000", 1}, {"111", 1}}));
  out.emplace_back("GHZ-", combo({{"000", 1}, {"111", -1}}));
  return out;
}

CVector collective_state_s2(const std::string& name) {
  for (auto& [label, vec] : collective_basis_s2())
    if (label == name) return vec;
  throw ConfigError("collective_state_s2: unknown state '" + name + "'");
}

DecompositionReport verify_hs1_decomposition(const Scheme2Params& p) {
  p.validate();
  const int q0 = levels().index_of("0");
  const int r = levels().index_of("r");

  // Static part of the step-1 drive in the frame rotated by the u_rr
  // interaction: omega_a acts where no other atom is excited, omega_b where
  // exactly one is (its -delta1 carrier is cancelled by u_rr = delta1).
  CMatrix h_static(kDim, kDim);
  for (int j = 0; j < kAtoms; ++j) {
    for (int s = 0; s < kDim; ++s) {
      const auto digits = unpack_index(s, 4, kAtoms);
      if (digits[j] != q0) continue;
      int excited_neighbors = 0;
      for (int k = 0; k < kAtoms; ++k)
        if (k != j && digits[k] == r) ++excited_neighbors;
      double amp = 0.0;
      if (excited_neighbors == 0) amp = p.omega_a;
      if (excited_neighbors == 1) amp = p.omega_b;
      if (amp == 0.0) continue;
      std::vector<int> up = digits;
      up[j] = r;
      h_static(pack_index(up, 4), s) += amp;
    }
  }
  h_static += h_static.dagger();

  auto element = [&](const CVector& bra, const CVector& ket) {
    return dot(bra, h_static.apply(ket)).real();
  };

  DecompositionReport rep;
  auto check = [&](const std::string& name, double expected, double actual) {
    rep.checks.push_back({name, expected, actual});
    rep.max_abs_deviation = std::max(rep.max_abs_deviation, std::abs(actual - expected));
  };

  const double sq2 = std::sqrt(2.0), sq3 = std::sqrt(3.0);
  check("<000|H|D1>", sq3 * p.omega_a, element(word_vec("000"), collective_state_s2("D1")));
  check("<D1|H|D2>", 2.0 * p.omega_b,
        element(collective_state_s2("D1"), collective_state_s2("D2")));
  check("<100|H|T1>", sq2 * p.omega_a, element(word_vec("100"), collective_state_s2("T1")));
  check("<010|H|T2>", sq2 * p.omega_a, element(word_vec("010"), collective_state_s2("T2")));
  check("<001|H|T3>", sq2 * p.omega_a, element(word_vec("001"), collective_state_s2("T3")));
  check("<1rr|H|T1>", sq2 * p.omega_b, element(word_vec("1rr"), collective_state_s2("T1")));
  check("<r1r|H|T2>", sq2 * p.omega_b, element(word_vec("r1r"), collective_state_s2("T2")));
  check("<rr1|H|T3>", sq2 * p.omega_b, element(word_vec("rr1"), collective_state_s2("T3")));

  // Diagonal of the omega_b part after diagonalization: build it alone.
  CMatrix h_b(kDim, kDim);
  for (int j = 0; j < kAtoms; ++j) {
    for (int s = 0; s < kDim; ++s) {
      const auto digits = unpack_index(s, 4, kAtoms);
      if (digits[j] != q0) continue;
      int excited_neighbors = 0;
      for (int k = 0; k < kAtoms; ++k)
        if (k != j && digits[k] == r) ++excited_neighbors;
      if (excited_neighbors != 1) continue;
      std::vector<int> up = digits;
      up[j] = r;
      h_b(pack_index(up, 4), s) += p.omega_b;
    }
  }
  h_b += h_b.dagger();
  auto diag_b = [&](const CVector& v) { return dot(v, h_b.apply(v)).real(); };
  check("<D+|Hb|D+>", 2.0 * p.omega_b, diag_b(collective_state_s2("D+")));
  check("<D-|Hb|D->", -2.0 * p.omega_b, diag_b(collective_state_s2("D-")));
  for (int n = 1; n <= 3; ++n) {
    const std::string base = "T" + std::to_string(n);
    check("<" + base + "+|Hb|" + base + "+>", sq2 * p.omega_b,
          diag_b(collective_state_s2(base + "+")));
    check("<" + base + "-|Hb|" + base + "->", -sq2 * p.omega_b,
          diag_b(collective_state_s2(base + "-")));
  }
  return rep;
}

double antiblockade_rate(double omega_p, double delta2) {
  if (delta2 <= 0.0) throw ConfigError("antiblockade_rate: delta2 must be positive");
  return 12.0 * std::sqrt(2.0) * omega_p * omega_p * omega_p / (delta2 * delta2);
}

CMatrix mixed_initial_state_6() {
  CMatrix rho(kDim, kDim);
  for (const char* w : {"100", "010", "001", "011", "101", "110"}) {
    const int idx = word(w);
    rho(idx, idx) = 1.0 / 6.0;
  }
  return rho;
}

}  // namespace ghzsim::scheme2
