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

#include "ghzsim/scheme1.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "ghzsim/integrate.hpp"
#include "ghzsim/light_shift.hpp"
#include "ghzsim/operators.hpp"

namespace ghzsim::scheme1 {

namespace {

constexpr double kConstraintTol = 1e-9;

void require(bool cond, const std::string& field, const std::string& rule) {
  if (!cond) {
    throw ConfigError("scheme1 parameters: " + field + " violates " + rule +
                      " (set override_constraints to accept)");
  }
}

// Drive operator split by ring-neighbor Rydberg occupancy:
// P_{j-1}^m sigma_j^{rg} P_{j+1}^n in the (g, r) basis.
CMatrix neighbor_projected_drive(int j, int m, int n, int n_atoms) {
  const LevelScheme lv = LevelScheme::scheme1_effective();
  return projected_transition(j, lv.rydberg(), lv.ground(), m, n, lv, n_atoms);
}

}  // namespace

double Scheme1Params::resonant_delta1() const {
  if (n_atoms == 3) return 2.0 * omega2;
  if (n_atoms == 5) return (1.0 + std::sqrt(5.0)) * omega2;
  throw ConfigError("scheme1 parameters: n_atoms must be 3 or 5");
}

void Scheme1Params::fill_defaults() {
  if (delta1 == 0.0) delta1 = resonant_delta1();
  if (delta2 == 0.0) delta2 = interaction_u;
  if (delta3 == 0.0) delta3 = 2.0 * interaction_u - delta1;
}

void Scheme1Params::validate() const {
  if (n_atoms != 3 && n_atoms != 5)
    throw ConfigError("scheme1 parameters: n_atoms must be 3 or 5");
  for (auto [v, name] : {std::pair{omega0, "omega0"}, {omega1, "omega1"}, {omega2, "omega2"},
                         {omega3, "omega3"}, {interaction_u, "U"}, {gamma_e, "Gamma"},
                         {gamma_r, "gamma_r"}}) {
    if (v < 0.0) throw ConfigError(std::string("scheme1 parameters: ") + name + " must be >= 0");
  }
  if (omega0 > 0.0 && gamma_e <= 0.0)
    throw ConfigError("scheme1 parameters: Gamma must be positive when omega0 > 0");
  if (!constraints_overridden) {
    require(std::abs(delta2 - interaction_u) <= kConstraintTol, "delta2", "delta2 = U");
    require(std::abs(delta3 - (2.0 * interaction_u - delta1)) <= kConstraintTol, "delta3",
            "delta3 = 2U - delta1");
    require(std::abs(delta1 - resonant_delta1()) <= kConstraintTol, "delta1",
            n_atoms == 3 ? "delta1 = 2 omega2" : "delta1 = (1 + sqrt 5) omega2");
  }
}

double Scheme1Params::gamma_eff() const {
  if (gamma_eff_direct) return *gamma_eff_direct;
  if (gamma_e <= 0.0)
    throw ConfigError("scheme1 parameters: gamma_eff needs Gamma > 0 or a direct value");
  return 4.0 * omega0 * omega0 / gamma_e;
}

MasterEq build_full_3atom(const Scheme1Params& p) {
  if (p.n_atoms != 3)
    throw ConfigError("build_full_3atom: only the three-atom full model is supported");
  p.validate();
  const LevelScheme lv = LevelScheme::scheme1_full();
  const int n = 3;
  const int d = lv.dim();
  MasterEq me;
  me.dim = 27;
  me.label = "scheme1_full_3atom";

  const int g = lv.index_of("g"), e = lv.index_of("e"), r = lv.index_of("r");
  const double drive_amp[3] = {p.omega1, p.omega2, p.omega3};
  const double drive_det[3] = {p.delta1, p.delta2, p.delta3};
  std::vector<RotatingDrive> drives;
  for (int j = 0; j < n; ++j) {
    const CMatrix sig_rg = embed_site(matrix_unit(d, r, g), j, n);
    for (int a = 0; a < 3; ++a) {
      HTerm term;
      const Envelope carrier = Envelope::complex_exp(-drive_det[a]);
      if (p.pulse && (a == 0 || a == 2)) {
        term.matrix = sig_rg;
        term.envelope = Envelope::product(
            Envelope::gaussian(p.pulse->amp, p.pulse->center, p.pulse->width), carrier);
        // pulse amplitude bounds the shift it needs compensated
        drives.push_back({p.pulse->amp * sig_rg, -drive_det[a]});
      } else {
        term.matrix = drive_amp[a] * sig_rg;
        term.envelope = carrier;
        drives.push_back({term.matrix, -drive_det[a]});
      }
      term.add_conjugate = true;
      me.hterms.push_back(std::move(term));
    }
    const CMatrix pump_e = Complex(p.omega0) * embed_site(matrix_unit(d, r, e), j, n);
    drives.push_back({pump_e, 0.0});
    me.hterms.push_back({pump_e, Envelope::constant(), true});
  }

  CMatrix interaction(27, 27);
  std::vector<double> frame(27, 0.0);
  for (int s = 0; s < 27; ++s) {
    const auto digits = unpack_index(s, d, n);
    int pairs = 0;
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (digits[j] == r && digits[k] == r) ++pairs;
    interaction(s, s) = p.interaction_u * pairs;
    frame[s] = p.interaction_u * pairs;
  }
  me.hterms.push_back({std::move(interaction), Envelope::constant(), false});
  me.observable_frame = frame;

  if (p.stark_compensation && p.interaction_u > 0.0) {
    // Shim away the dressed-energy structure of the cross-class channels
    // (detunings at the interaction scale); the working transitions, detuned
    // by at most ~2 omega2, stay untouched.
    CMatrix shim = Complex(-1.0) * light_shift_hamiltonian(frame, drives,
                                                           0.5 * p.interaction_u);
    if (shim.max_abs() > 0.0)
      me.hterms.push_back({std::move(shim), Envelope::constant(), false});
  }

  for (int j = 0; j < n; ++j) {
    me.dissipators.push_back({std::sqrt(p.gamma_e) * embed_site(matrix_unit(d, g, e), j, n)});
    if (p.gamma_r > 0.0)
      me.dissipators.push_back({std::sqrt(p.gamma_r) * embed_site(matrix_unit(d, g, r), j, n)});
  }

  me.f_max = std::max({p.interaction_u, p.delta1, p.delta2, p.delta3, p.gamma_e});
  me.validate();
  return me;
}

MasterEq build_effective(const Scheme1Params& p) {
  p.validate();
  const int n = p.n_atoms;
  MasterEq me;
  me.dim = 1 << n;
  me.label = "scheme1_effective_" + std::to_string(n) + "atom";

  // Drive coefficient per ordered neighbor pair is Omega_{m+n+1}: the
  // normalization under which the mixed-neighbor (resonant) part has the
  // E1 eigenvalues +/- 2 omega2 that delta1 = 2 omega2 is tuned to.
  const double amps[3] = {p.omega1, p.omega2, p.omega3};
  for (int j = 0; j < n; ++j) {
    for (int m = 0; m <= 1; ++m) {
      for (int nn = 0; nn <= 1; ++nn) {
        const int order = m + nn;  // 0, 1 or 2
        HTerm term;
        const Envelope carrier = Envelope::complex_exp((order - 1) * p.delta1);
        const CMatrix op = neighbor_projected_drive(j, m, nn, n);
        if (p.pulse && (order == 0 || order == 2)) {
          term.matrix = op;
          term.envelope = Envelope::product(
              Envelope::gaussian(p.pulse->amp, p.pulse->center, p.pulse->width), carrier);
        } else if (order == 1) {
          term.matrix = amps[1] * op;
          term.envelope = Envelope::constant();
        } else {
          term.matrix = amps[order] * op;
          term.envelope = carrier;
        }
        term.add_conjugate = true;
        me.hterms.push_back(std::move(term));
      }
    }
  }

  const double geff = p.gamma_eff();
  const LevelScheme lv = LevelScheme::scheme1_effective();
  for (int j = 0; j < n; ++j) {
    const CMatrix lower =
        projected_transition(j, lv.ground(), lv.rydberg(), 0, 0, lv, n);
    me.dissipators.push_back({std::sqrt(geff) * lower});
  }

  const double amp_scale =
      std::max({p.omega1, p.omega2, p.omega3, p.pulse ? p.pulse->amp : 0.0});
  me.f_max = std::max({p.delta1, geff, amp_scale});
  me.validate();
  return me;
}

MasterEq build_collective_model(const Scheme1Params& p) {
  p.validate();
  if (p.n_atoms != 3)
    throw ConfigError("build_collective_model: defined for three atoms");
  if (std::abs(p.omega1 - p.omega3) > 1e-12)
    throw ConfigError("build_collective_model: requires omega1 == omega3");
  const double omega = p.omega1;

  const CVector ghz_p = collective_state(3, "GHZ+");
  const CVector e1p = collective_state(3, "E1+");
  const CVector e2p = collective_state(3, "E2+");
  const CVector e2m = collective_state(3, "E2-");
  const CVector e3p = collective_state(3, "E3+");
  const CVector e3m = collective_state(3, "E3-");

  CMatrix h = std::sqrt(3.0) * omega *
              (CMatrix::outer(ghz_p, e1p) + CMatrix::outer(e1p, ghz_p));
  h += p.omega2 * (CMatrix::outer(e2p, e2p) - CMatrix::outer(e2m, e2m) +
                   CMatrix::outer(e3p, e3p) - CMatrix::outer(e3m, e3m));

  MasterEq me;
  me.dim = 8;
  me.label = "scheme1_collective";
  me.hterms.push_back({std::move(h), Envelope::constant(), false});

  const double geff = p.gamma_eff();
  const LevelScheme lv = LevelScheme::scheme1_effective();
  for (int j = 0; j < 3; ++j) {
    me.dissipators.push_back(
        {std::sqrt(geff) * projected_transition(j, lv.ground(), lv.rydberg(), 0, 0, lv, 3)});
  }
  me.f_max = std::max({p.omega2, std::sqrt(3.0) * omega, geff});
  me.validate();
  return me;
}

std::vector<std::pair<std::string, CVector>> collective_states(int n_atoms) {
  if (n_atoms != 3 && n_atoms != 5)
    throw ConfigError("collective_states: n_atoms must be 3 or 5");
  const int dim = 1 << n_atoms;
  auto basis = [dim](int idx) {
    CVector v(dim, 0.0);
    v[idx] = 1.0;
    return v;
  };
  std::vector<std::pair<std::string, CVector>> out;
  // site 0 most significant; g = 0, r = 1
  out.emplace_back("GHZ+", normalized(add(basis(0), basis(dim - 1))));
  out.emplace_back("GHZ-", normalized(add(basis(0), scaled(basis(dim - 1), -1.0))));
  if (n_atoms == 3) {
    const int ggr = 0b001, grg = 0b010, grr = 0b011, rgg = 0b100, rgr = 0b101, rrg = 0b110;
    auto combo = [&](std::vector<std::pair<int, double>> terms) {
      CVector v(dim, 0.0);
      for (auto [idx, w] : terms) v[idx] += w;
      return normalized(std::move(v));
    };
    for (double s : {+1.0, -1.0}) {
      const char tag = s > 0 ? '+' : '-';
      out.emplace_back(std::string("E1") + tag,
                       combo({{grr, 1}, {rgr, 1}, {rrg, 1}, {ggr, s}, {grg, s}, {rgg, s}}));
      out.emplace_back(std::string("E2") + tag,
                       combo({{rrg, 1}, {grr, -1}, {rgg, s}, {ggr, -s}}));
      out.emplace_back(std::string("E3") + tag,
                       combo({{rgr, 2}, {grr, -1}, {rrg, -1}, {grg, -2 * s}, {ggr, s}, {rgg, s}}));
    }
  }
  return out;
}

CVector collective_state(int n_atoms, const std::string& name) {
  for (auto& [label, vec] : collective_states(n_atoms))
    if (label == name) return vec;
  throw ConfigError("collective_state: unknown state '" + name + "'");
}

std::vector<double> resonant_spectrum(int n_atoms, double omega2) {
  if (n_atoms != 3 && n_atoms != 5)
    throw ConfigError("resonant_spectrum: n_atoms must be 3 or 5");
  const int dim = 1 << n_atoms;
  CMatrix h(dim, dim);
  for (int j = 0; j < n_atoms; ++j) {
    for (auto [m, nn] : {std::pair{0, 1}, {1, 0}}) {
      const CMatrix op = neighbor_projected_drive(j, m, nn, n_atoms);
      h += omega2 * op;
      h += omega2 * op.dagger();
    }
  }
  using EigenRowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const EigenRowMat> map(h.data(), dim, dim);
  Eigen::SelfAdjointEigenSolver<EigenRowMat> es(map, Eigen::EigenvaluesOnly);
  std::vector<double> evals(es.eigenvalues().data(), es.eigenvalues().data() + dim);
  return evals;
}

GammaEffFit gamma_eff_oracle(double omega0, double gamma_e, double t_end,
                             bool allow_outside_regime) {
  if (omega0 < 0.0 || gamma_e <= 0.0)
    throw ConfigError("gamma_eff_oracle: need omega0 >= 0 and Gamma > 0");
  if (!allow_outside_regime && gamma_e < 5.0 * omega0)
    throw ConfigError("gamma_eff_oracle: outside the regime Gamma >= 5 omega0; "
                      "pass allow_outside_regime to force");
  GammaEffFit fit;
  fit.closed_form = 4.0 * omega0 * omega0 / gamma_e;

  // Exact single-atom (g, e, r) model: resonant omega0 on e<->r, decay e->g.
  MasterEq me;
  me.dim = 3;
  me.label = "gamma_eff_oracle";
  me.hterms.push_back({Complex(omega0) * matrix_unit(3, 2, 1), Envelope::constant(), true});
  me.dissipators.push_back({std::sqrt(gamma_e) * matrix_unit(3, 0, 1)});
  me.f_max = std::max(gamma_e, omega0);

  CMatrix rho0(3, 3);
  rho0(2, 2) = 1.0;
  CVector r_state = {0.0, 0.0, 1.0};
  const auto series = integrate(me, rho0, t_end, /*dt=*/0.0,
                                {Observable::population("P_r", r_state)}, /*stride=*/0);

  // Least-squares slope of ln P_r over the window P_r in [0.2, 0.8].
  double sw = 0, st = 0, sy = 0, stt = 0, sty = 0;
  const auto& pr = series.column("P_r");
  for (size_t i = 0; i < series.times.size(); ++i) {
    if (pr[i] < 0.2 || pr[i] > 0.8) continue;
    const double t = series.times[i], y = std::log(pr[i]);
    sw += 1;
    st += t;
    sy += y;
    stt += t * t;
    sty += t * y;
  }
  if (sw < 2) {
    const auto [lo, hi] = std::minmax_element(pr.begin(), pr.end());
    if (*hi - *lo < 1e-9) {  // no decay at all (omega0 = 0)
      fit.fitted = 0.0;
      return fit;
    }
    throw ConfigError("gamma_eff_oracle: fit window is empty, increase t_end");
  }
  const double denom = sw * stt - st * st;
  if (denom <= 0.0) throw NumericalError("gamma_eff_oracle: degenerate fit window");
  fit.fitted = -(sw * sty - st * sy) / denom;
  return fit;
}

CMatrix mixed_initial_state(int n_atoms, int local_dim) {
  if (n_atoms != 3 && n_atoms != 5)
    throw ConfigError("mixed_initial_state: n_atoms must be 3 or 5");
  if (local_dim != 2 && local_dim != 3)
    throw ConfigError("mixed_initial_state: local_dim must be 2 or 3");
  int dim = 1;
  for (int j = 0; j < n_atoms; ++j) dim *= local_dim;
  const int r_level = local_dim - 1;  // last level is |r> in both schemes
  const int count = 1 << n_atoms;
  CMatrix rho(dim, dim);
  for (int bits = 0; bits < count; ++bits) {
    std::vector<int> digits(n_atoms, 0);
    for (int j = 0; j < n_atoms; ++j)
      if ((bits >> (n_atoms - 1 - j)) & 1) digits[j] = r_level;
    rho(pack_index(digits, local_dim), pack_index(digits, local_dim)) = 1.0 / count;
  }
  return rho;
}

}  // namespace ghzsim::scheme1
