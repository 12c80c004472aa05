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

#include "ghzsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "ghzsim/operators.hpp"

namespace ghzsim {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& v, int line) {
  size_t pos = 0;
  double out;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": expected a number, got '" + v + "'",
                     line);
  }
  if (pos != v.size())
    throw ParseError("line " + std::to_string(line) + ": trailing junk in number '" + v + "'",
                     line);
  return out;
}

int parse_int(const std::string& v, int line) {
  const double d = parse_double(v, line);
  const int i = int(std::lround(d));
  if (std::abs(d - i) > 0)
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + v + "'",
                     line);
  return i;
}

bool parse_bool(const std::string& v, int line) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ParseError("line " + std::to_string(line) + ": expected true/false, got '" + v + "'",
                   line);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool is_scheme1(SchemeKind k) {
  return k == SchemeKind::Scheme1Full || k == SchemeKind::Scheme1Effective ||
         k == SchemeKind::Scheme1Collective;
}

int scenario_dim(const Scenario& s) {
  switch (s.scheme) {
    case SchemeKind::Scheme1Full:
      return 27;
    case SchemeKind::Scheme1Effective:
      return 1 << s.s1.n_atoms;
    case SchemeKind::Scheme1Collective:
      return 8;
    case SchemeKind::Scheme2Full:
    case SchemeKind::Scheme2Effective:
      return 64;
  }
  return 0;
}

// Lift a (g, r) basis vector into a local-dimension-d register (g -> level 0,
// r -> the top level), e.g. the dim-8 GHZ vectors into the dim-27 full model.
CVector lift_gr_vector(const CVector& v, int n_atoms, int d) {
  if (d == 2) return v;
  int dim = 1;
  for (int j = 0; j < n_atoms; ++j) dim *= d;
  CVector out(dim, 0.0);
  for (size_t bits = 0; bits < v.size(); ++bits) {
    if (v[bits] == Complex(0.0)) continue;
    std::vector<int> digits(n_atoms, 0);
    for (int j = 0; j < n_atoms; ++j)
      if ((bits >> (n_atoms - 1 - j)) & 1) digits[j] = d - 1;
    out[pack_index(digits, d)] = v[bits];
  }
  return out;
}

}  // namespace

std::string to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::Scheme1Full:
      return "scheme1_full";
    case SchemeKind::Scheme1Effective:
      return "scheme1_effective";
    case SchemeKind::Scheme1Collective:
      return "scheme1_collective";
    case SchemeKind::Scheme2Full:
      return "scheme2_full";
    case SchemeKind::Scheme2Effective:
      return "scheme2_effective";
  }
  return "?";
}

SchemeKind scheme_kind_from_string(const std::string& s) {
  for (SchemeKind k :
       {SchemeKind::Scheme1Full, SchemeKind::Scheme1Effective, SchemeKind::Scheme1Collective,
        SchemeKind::Scheme2Full, SchemeKind::Scheme2Effective}) {
    if (to_string(k) == s) return k;
  }
  throw ConfigError("unknown scheme '" + s + "'");
}

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  bool override_constraints = false;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool scheme_seen = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string stripped = trim(raw);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line) + ": expected 'key = value'", line);
    const std::string key = trim(stripped.substr(0, eq));
    const std::string val = trim(stripped.substr(eq + 1));

    if (key == "scheme") {
      try {
        s.scheme = scheme_kind_from_string(val);
      } catch (const ConfigError& e) {
        throw ParseError("line " + std::to_string(line) + ": " + e.what(), line);
      }
      scheme_seen = true;
    } else if (key == "label") {
      s.label = val;
    } else if (key == "units") {
      if (val != "dimensionless" && val != "MHz_2pi")
        throw ParseError("line " + std::to_string(line) + ": units must be dimensionless or MHz_2pi",
                         line);
      s.units = val;
    } else if (key == "override_constraints") {
      override_constraints = parse_bool(val, line);
    } else if (key == "t_end") {
      s.t_end = parse_double(val, line);
    } else if (key == "dt") {
      s.dt = parse_double(val, line);
    } else if (key == "sample_stride") {
      s.sample_stride = parse_int(val, line);
    } else if (key == "initial_state") {
      s.initial_state = val;
    } else if (key == "observables") {
      s.observables = split(val, ',');
    } else if (key == "output") {
      s.output = val;
    } else if (key == "s1.omega0") {
      s.s1.omega0 = parse_double(val, line);
    } else if (key == "s1.omega1") {
      s.s1.omega1 = parse_double(val, line);
    } else if (key == "s1.omega2") {
      s.s1.omega2 = parse_double(val, line);
    } else if (key == "s1.omega3") {
      s.s1.omega3 = parse_double(val, line);
    } else if (key == "s1.delta1") {
      s.s1.delta1 = parse_double(val, line);
    } else if (key == "s1.delta2") {
      s.s1.delta2 = parse_double(val, line);
    } else if (key == "s1.delta3") {
      s.s1.delta3 = parse_double(val, line);
    } else if (key == "s1.U") {
      s.s1.interaction_u = parse_double(val, line);
    } else if (key == "s1.Gamma") {
      s.s1.gamma_e = parse_double(val, line);
    } else if (key == "s1.gamma_r") {
      s.s1.gamma_r = parse_double(val, line);
    } else if (key == "s1.gamma_eff") {
      s.s1.gamma_eff_direct = parse_double(val, line);
    } else if (key == "s1.n_atoms") {
      s.s1.n_atoms = parse_int(val, line);
    } else if (key == "s1.stark_compensation") {
      s.s1.stark_compensation = parse_bool(val, line);
    } else if (key == "s1.pulse_amp" || key == "s1.pulse_center" || key == "s1.pulse_width") {
      if (!s.s1.pulse) s.s1.pulse = scheme1::GaussianPulse{};
      if (key == "s1.pulse_amp") s.s1.pulse->amp = parse_double(val, line);
      if (key == "s1.pulse_center") s.s1.pulse->center = parse_double(val, line);
      if (key == "s1.pulse_width") s.s1.pulse->width = parse_double(val, line);
    } else if (key == "s2.omega_a") {
      s.s2.omega_a = parse_double(val, line);
    } else if (key == "s2.omega_b") {
      s.s2.omega_b = parse_double(val, line);
    } else if (key == "s2.omega_p") {
      s.s2.omega_p = parse_double(val, line);
    } else if (key == "s2.delta1") {
      s.s2.delta1 = parse_double(val, line);
    } else if (key == "s2.delta2") {
      s.s2.delta2 = parse_double(val, line);
    } else if (key == "s2.U_rr") {
      s.s2.u_rr = parse_double(val, line);
    } else if (key == "s2.U_pp") {
      s.s2.u_pp = parse_double(val, line);
    } else if (key == "s2.gamma") {
      s.s2.gamma = parse_double(val, line);
    } else if (key == "s2.N") {
      s.s2.switch_count = parse_int(val, line);
    } else if (key == "s2.T_total") {
      s.s2.total_time = parse_double(val, line);
    } else if (key == "s2.stark_compensation") {
      s.s2.stark_compensation = parse_bool(val, line);
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown key '" + key + "'", line);
    }
  }
  if (!scheme_seen) throw ParseError("missing required key 'scheme'", 0);

  s.s1.constraints_overridden = override_constraints;
  s.s2.constraints_overridden = override_constraints;
  if (is_scheme1(s.scheme)) {
    s.s1.fill_defaults();
    s.s1.validate();
  } else {
    s.s2.fill_defaults();
    s.s2.validate();
  }
  return s;
}

std::string render_scenario(const Scenario& s) {
  std::ostringstream out;
  out << "scheme = " << to_string(s.scheme) << "\n";
  if (!s.label.empty()) out << "label = " << s.label << "\n";
  out << "units = " << s.units << "\n";
  const bool overridden = s.s1.constraints_overridden || s.s2.constraints_overridden;
  out << "override_constraints = " << (overridden ? "true" : "false") << "\n";
  out << "t_end = " << fmt17(s.t_end) << "\n";
  if (s.dt != 0.0) out << "dt = " << fmt17(s.dt) << "\n";
  if (s.sample_stride != 0) out << "sample_stride = " << s.sample_stride << "\n";
  out << "initial_state = " << s.initial_state << "\n";
  if (!s.observables.empty()) {
    out << "observables = ";
    for (size_t i = 0; i < s.observables.size(); ++i)
      out << (i ? "," : "") << s.observables[i];
    out << "\n";
  }
  if (!s.output.empty()) out << "output = " << s.output << "\n";
  if (is_scheme1(s.scheme)) {
    const auto& p = s.s1;
    out << "s1.n_atoms = " << p.n_atoms << "\n";
    out << "s1.omega0 = " << fmt17(p.omega0) << "\n";
    out << "s1.omega1 = " << fmt17(p.omega1) << "\n";
    out << "s1.omega2 = " << fmt17(p.omega2) << "\n";
    out << "s1.omega3 = " << fmt17(p.omega3) << "\n";
    out << "s1.delta1 = " << fmt17(p.delta1) << "\n";
    out << "s1.delta2 = " << fmt17(p.delta2) << "\n";
    out << "s1.delta3 = " << fmt17(p.delta3) << "\n";
    out << "s1.U = " << fmt17(p.interaction_u) << "\n";
    out << "s1.Gamma = " << fmt17(p.gamma_e) << "\n";
    out << "s1.gamma_r = " << fmt17(p.gamma_r) << "\n";
    if (!p.stark_compensation) out << "s1.stark_compensation = false\n";
    if (p.gamma_eff_direct) out << "s1.gamma_eff = " << fmt17(*p.gamma_eff_direct) << "\n";
    if (p.pulse) {
      out << "s1.pulse_amp = " << fmt17(p.pulse->amp) << "\n";
      out << "s1.pulse_center = " << fmt17(p.pulse->center) << "\n";
      out << "s1.pulse_width = " << fmt17(p.pulse->width) << "\n";
    }
  } else {
    const auto& p = s.s2;
    out << "s2.omega_a = " << fmt17(p.omega_a) << "\n";
    out << "s2.omega_b = " << fmt17(p.omega_b) << "\n";
    out << "s2.omega_p = " << fmt17(p.omega_p) << "\n";
    out << "s2.delta1 = " << fmt17(p.delta1) << "\n";
    out << "s2.delta2 = " << fmt17(p.delta2) << "\n";
    out << "s2.U_rr = " << fmt17(p.u_rr) << "\n";
    out << "s2.U_pp = " << fmt17(p.u_pp) << "\n";
    out << "s2.gamma = " << fmt17(p.gamma) << "\n";
    out << "s2.N = " << p.switch_count << "\n";
    out << "s2.T_total = " << fmt17(p.total_time) << "\n";
    if (!p.stark_compensation) out << "s2.stark_compensation = false\n";
  }
  return out.str();
}

CVector resolve_state(SchemeKind scheme, int n_atoms, const std::string& name) {
  if (is_scheme1(scheme)) {
    const int d = scheme == SchemeKind::Scheme1Full ? 3 : 2;
    const int n = scheme == SchemeKind::Scheme1Collective ? 3 : n_atoms;
    for (auto& [label, vec] : scheme1::collective_states(n))
      if (label == name) return lift_gr_vector(vec, n, d);
    const LevelScheme lv =
        d == 3 ? LevelScheme::scheme1_full() : LevelScheme::scheme1_effective();
    CVector v(scheme == SchemeKind::Scheme1Full ? 27 : (1 << n), 0.0);
    v[lv.product_index(name, n)] = 1.0;
    return v;
  }
  for (auto& [label, vec] : scheme2::collective_basis_s2())
    if (label == name) return vec;
  CVector v(64, 0.0);
  v[LevelScheme::scheme2().product_index(name, 3)] = 1.0;
  return v;
}

BuiltScenario build_scenario(const Scenario& s) {
  BuiltScenario b;
  switch (s.scheme) {
    case SchemeKind::Scheme1Full:
      b.model = scheme1::build_full_3atom(s.s1);
      break;
    case SchemeKind::Scheme1Effective:
      b.model = scheme1::build_effective(s.s1);
      break;
    case SchemeKind::Scheme1Collective:
      b.model = scheme1::build_collective_model(s.s1);
      break;
    case SchemeKind::Scheme2Full:
      b.schedule = scheme2::build_switching_schedule(s.s2, scheme2::ModelKind::Full);
      break;
    case SchemeKind::Scheme2Effective:
      b.schedule = scheme2::build_switching_schedule(s.s2, scheme2::ModelKind::Effective);
      break;
  }

  const int dim = scenario_dim(s);
  if (s.initial_state == "mixed_default") {
    if (s.scheme == SchemeKind::Scheme1Full) {
      b.rho0 = scheme1::mixed_initial_state(3, 3);
    } else if (is_scheme1(s.scheme)) {
      b.rho0 = scheme1::mixed_initial_state(
          s.scheme == SchemeKind::Scheme1Collective ? 3 : s.s1.n_atoms, 2);
    } else {
      b.rho0 = scheme2::mixed_initial_state_6();
    }
  } else if (s.initial_state.rfind("named:", 0) == 0) {
    const CVector psi = resolve_state(s.scheme, s.s1.n_atoms, s.initial_state.substr(6));
    b.rho0 = CMatrix::outer(psi, psi);
  } else if (s.initial_state.rfind("weights:", 0) == 0) {
    const auto parts = split(s.initial_state.substr(8), ',');
    if (int(parts.size()) != dim)
      throw ConfigError("initial_state weights: expected " + std::to_string(dim) + " entries, got " +
                        std::to_string(parts.size()));
    std::vector<double> w(parts.size());
    double sum = 0.0;
    for (size_t i = 0; i < parts.size(); ++i) {
      w[i] = std::stod(parts[i]);
      if (w[i] < 0.0) throw ConfigError("initial_state weights must be non-negative");
      sum += w[i];
    }
    if (sum <= 0.0) throw ConfigError("initial_state weights must not all vanish");
    for (auto& x : w) x /= sum;
    b.rho0 = CMatrix::diagonal(w);
  } else {
    throw ConfigError("unknown initial_state '" + s.initial_state + "'");
  }

  for (const auto& spec : s.observables) {
    std::string name = spec;
    bool sqrt_flavor = false;
    if (spec.rfind("P:", 0) == 0) {
      name = spec.substr(2);
    } else if (spec.rfind("F:", 0) == 0) {
      name = spec.substr(2);
      sqrt_flavor = true;
    }
    CVector psi = resolve_state(s.scheme, s.s1.n_atoms, name);
    b.observables.push_back(sqrt_flavor ? Observable::fidelity(spec, std::move(psi))
                                        : Observable::population(spec, std::move(psi)));
  }
  return b;
}

TimeSeries run_scenario(const Scenario& s, const SampleHook& hook) {
  if (s.t_end <= 0.0) throw ConfigError("scenario: t_end must be positive");
  BuiltScenario b = build_scenario(s);
  IntegrateOptions opts;
  opts.on_sample = hook;
  if (b.model) return integrate(*b.model, b.rho0, s.t_end, s.dt, b.observables, s.sample_stride, opts);
  return integrate(*b.schedule, b.rho0, s.t_end, s.dt, b.observables, s.sample_stride, opts);
}

double time_scale_for(const Scenario& s) {
  if (s.units == "dimensionless") return 1.0;
  // Physical reference rates: omega2 = 2pi x 1 MHz (scheme 1),
  // omega_b = 2pi x 3 MHz (scheme 2); times become microseconds.
  const double f_mhz = is_scheme1(s.scheme) ? 1.0 : 3.0;
  return 2.0 * M_PI * f_mhz;
}

std::string time_label_for(const Scenario& s) {
  return s.units == "dimensionless" ? "t" : "t_us";
}

}  // namespace ghzsim
