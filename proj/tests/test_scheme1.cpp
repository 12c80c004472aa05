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

#include <doctest.h>

#include <cmath>

#include "ghzsim/integrate.hpp"
#include "ghzsim/operators.hpp"
#include "ghzsim/scheme1.hpp"
#include "ghzsim/steady_state.hpp"

using namespace ghzsim;
using namespace ghzsim::scheme1;

namespace {

Scheme1Params fig2_params() {
  Scheme1Params p;
  p.n_atoms = 3;
  p.omega0 = 0.77;
  p.omega1 = 0.05;
  p.omega2 = 1.0;
  p.omega3 = 0.05;
  p.interaction_u = 300.0;
  p.gamma_e = 6.0;
  p.fill_defaults();
  return p;
}

}  // namespace

TEST_CASE("parameter constraints") {
  Scheme1Params p = fig2_params();
  CHECK(p.delta1 == doctest::Approx(2.0));
  CHECK(p.delta2 == doctest::Approx(300.0));
  CHECK(p.delta3 == doctest::Approx(598.0));
  p.validate();

  p.delta2 = 200.0;  // breaks delta2 = U
  CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("delta2"), ConfigError);
  p.constraints_overridden = true;
  p.validate();

  Scheme1Params five;
  five.n_atoms = 5;
  five.omega2 = 1.0;
  five.fill_defaults();
  CHECK(five.delta1 == doctest::Approx(1.0 + std::sqrt(5.0)));

  Scheme1Params bad = fig2_params();
  bad.gamma_e = 0.0;  // omega0 > 0 needs Gamma > 0
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  CHECK(fig2_params().gamma_eff() == doctest::Approx(4.0 * 0.77 * 0.77 / 6.0));
}

TEST_CASE("resonant spectrum matches the collective-basis eigenvalues") {
  const auto s3 = resonant_spectrum(3, 1.0);
  REQUIRE(s3.size() == 8);
  const double expect3[8] = {-2, -1, -1, 0, 0, 1, 1, 2};
  for (int i = 0; i < 8; ++i) CHECK(s3[i] == doctest::Approx(expect3[i]).epsilon(1e-10));

  // scaling with omega2
  const auto s3b = resonant_spectrum(3, 2.5);
  CHECK(s3b.front() == doctest::Approx(-5.0).epsilon(1e-10));

  const auto s5 = resonant_spectrum(5, 1.0);
  REQUIRE(s5.size() == 32);
  const double golden = 1.0 + std::sqrt(5.0);
  double closest = 1e9;
  for (double v : s5) closest = std::min(closest, std::abs(v - golden));
  CHECK(closest <= 1e-10);
  // symmetric about zero
  for (size_t i = 0; i < s5.size(); ++i)
    CHECK(s5[i] == doctest::Approx(-s5[s5.size() - 1 - i]).epsilon(1e-10));
}

TEST_CASE("collective states are orthonormal with the printed amplitudes") {
  const auto states = collective_states(3);
  REQUIRE(states.size() == 8);
  for (size_t i = 0; i < states.size(); ++i) {
    CHECK(norm(states[i].second) == doctest::Approx(1.0).epsilon(1e-12));
    for (size_t j = i + 1; j < states.size(); ++j)
      CHECK(std::abs(dot(states[i].second, states[j].second)) <= 1e-12);
  }
  const LevelScheme lv = LevelScheme::scheme1_effective();
  const CVector e1p = collective_state(3, "E1+");
  CHECK(e1p[lv.product_index("grr", 3)].real() == doctest::Approx(1.0 / std::sqrt(6.0)));
  const CVector e3p = collective_state(3, "E3+");
  CHECK(e3p[lv.product_index("rgr", 3)].real() == doctest::Approx(2.0 / (2.0 * std::sqrt(3.0))));
  const CVector ghzm5 = collective_state(5, "GHZ-");
  CHECK(ghzm5[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(ghzm5[31].real() == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(collective_states(4), ConfigError);
}

TEST_CASE("effective model at zero weak drives exposes the resonant part") {
  Scheme1Params p = fig2_params();
  p.omega1 = 0.0;
  p.omega3 = 0.0;
  const MasterEq me = build_effective(p);
  const CMatrix h0 = me.hamiltonian(0.0);
  // E1+/- are eigenvectors at +/- 2 omega2, E2/E3 at +/- omega2
  for (auto [name, val] : {std::pair{"E1+", 2.0}, {"E1-", -2.0}, {"E2+", 1.0},
                           {"E2-", -1.0}, {"E3+", 1.0}, {"E3-", -1.0}}) {
    const CVector v = collective_state(3, name);
    const CVector hv = h0.apply(v);
    CHECK(norm(add(hv, scaled(v, -val))) <= 1e-12);
  }
}

TEST_CASE("full three-atom model structure") {
  const Scheme1Params p = fig2_params();
  const MasterEq me = build_full_3atom(p);
  CHECK(me.dim == 27);
  CHECK(me.f_max == doctest::Approx(598.0));  // max(U, deltas, Gamma)
  CHECK(me.dissipators.size() == 3);
  CHECK(me.observable_frame.size() == 27);
  const LevelScheme lv = LevelScheme::scheme1_full();
  CHECK(me.observable_frame[lv.product_index("rrr", 3)] == doctest::Approx(3.0 * 300.0));
  CHECK(me.observable_frame[lv.product_index("rrg", 3)] == doctest::Approx(300.0));
  CHECK(me.observable_frame[lv.product_index("rgg", 3)] == 0.0);

  Scheme1Params withdecay = fig2_params();
  withdecay.gamma_r = 0.01;
  CHECK(build_full_3atom(withdecay).dissipators.size() == 6);

  Scheme1Params five = fig2_params();
  five.n_atoms = 5;
  five.fill_defaults();
  CHECK_THROWS_AS(build_full_3atom(five), ConfigError);
}

TEST_CASE("full model with all drives off has a diagonal Hamiltonian") {
  Scheme1Params p;
  p.n_atoms = 3;
  p.omega2 = 0.0;  // every drive off
  p.interaction_u = 300.0;
  p.fill_defaults();
  const MasterEq me = build_full_3atom(p);
  const CMatrix h = me.hamiltonian(0.37);
  for (int r = 0; r < 27; ++r)
    for (int c = 0; c < 27; ++c)
      if (r != c) CHECK(std::abs(h(r, c)) == 0.0);
  // classical product states are stationary
  CMatrix rho = mixed_initial_state(3, 3);
  CHECK(rhs(me, rho, 0.0).max_abs() <= 1e-14);
}

TEST_CASE("engineered dissipators annihilate the target state") {
  for (int n : {3, 5}) {
    Scheme1Params p;
    p.n_atoms = n;
    p.omega1 = p.omega3 = 0.02;
    p.omega2 = 1.0;
    p.gamma_eff_direct = 0.4;
    p.fill_defaults();
    const MasterEq me = build_effective(p);
    const CVector ghzm = collective_state(n, "GHZ-");
    for (const auto& d : me.dissipators) CHECK(norm(d.jump.apply(ghzm)) <= 1e-12);
  }
}

TEST_CASE("collective model darkness and steady state") {
  const Scheme1Params p = fig2_params();
  const MasterEq me = build_collective_model(p);
  CHECK(me.time_independent());
  const CVector ghzm = collective_state(3, "GHZ-");
  const CVector ghzp = collective_state(3, "GHZ+");
  const CVector e1p = collective_state(3, "E1+");
  const CMatrix h = me.hamiltonian(0.0);
  CHECK(norm(h.apply(ghzm)) <= 1e-12);
  for (const auto& d : me.dissipators) CHECK(norm(d.jump.apply(ghzm)) <= 1e-12);
  CHECK(dot(ghzp, h.apply(e1p)).real() ==
        doctest::Approx(std::sqrt(3.0) * 0.05).epsilon(1e-12));

  const auto ss = steady_state(me);
  CHECK(fidelity(ss.rho, ghzm) >= 0.999);
  CHECK(ss.lambda_second > 1e-6);
  CHECK(rhs(me, ss.rho, 0.0).max_abs() <= 1e-8);  // fixed point
  CHECK(population(CMatrix::outer(ghzp, ghzp), ghzm) == doctest::Approx(0.0));

  Scheme1Params asym = fig2_params();
  asym.omega3 = 0.06;
  CHECK_THROWS_AS(build_collective_model(asym), ConfigError);
}

TEST_CASE("effective trajectory from the target state stays near it") {
  // The interaction-picture effective model keeps micromotion terms, so the
  // target is dark only up to second order in (drive / detuning): deviations
  // stay at the few-1e-3 level for the fig. 2 drive strength.
  const Scheme1Params p = fig2_params();
  const MasterEq me = build_effective(p);
  const CVector ghzm = collective_state(3, "GHZ-");
  const CMatrix rho0 = CMatrix::outer(ghzm, ghzm);
  const auto ts = integrate(me, rho0, 100.0, 0.0,
                            {Observable::population("P:GHZ-", ghzm)}, 0);
  double dev = 0.0;
  for (double v : ts.column("P:GHZ-")) dev = std::max(dev, std::abs(v - 1.0));
  CHECK(dev <= 5e-3);
}

TEST_CASE("gamma_eff oracle") {
  const auto fit = gamma_eff_oracle(0.5, 5.0, 12.0 * 5.0 / (4.0 * 0.25));
  CHECK(fit.closed_form == doctest::Approx(0.2));
  CHECK(fit.fitted / fit.closed_form == doctest::Approx(1.0).epsilon(0.1));

  const auto arithmetic = gamma_eff_oracle(0.77, 6.0, 200.0, true);
  CHECK(arithmetic.closed_form == doctest::Approx(4.0 * 0.77 * 0.77 / 6.0).epsilon(1e-12));

  // no coupling: the Rydberg population never decays
  const auto none = gamma_eff_oracle(0.0, 5.0, 10.0);
  CHECK(none.fitted == 0.0);
  CHECK(none.closed_form == 0.0);

  CHECK_THROWS_AS(gamma_eff_oracle(1.0, 2.0, 10.0), ConfigError);        // outside regime
  CHECK_THROWS_AS(gamma_eff_oracle(0.1, 5.0, 1e-3, false), ConfigError);  // window empty
}

TEST_CASE("mixed initial state") {
  const CMatrix rho8 = mixed_initial_state(3, 2);
  CHECK(std::abs(rho8.trace() - Complex(1.0)) <= 1e-15);
  CHECK((rho8 * rho8).trace().real() == doctest::Approx(1.0 / 8.0));
  CHECK(population(rho8, collective_state(3, "GHZ-")) == doctest::Approx(1.0 / 8.0));

  const CMatrix rho27 = mixed_initial_state(3, 3);
  CHECK(std::abs(rho27.trace() - Complex(1.0)) <= 1e-15);
  const LevelScheme lv = LevelScheme::scheme1_full();
  // no support on the short-lived level
  for (int s = 0; s < 27; ++s) {
    const auto digits = unpack_index(s, 3, 3);
    bool has_e = false;
    for (int dig : digits) has_e |= (dig == 1);
    if (has_e) CHECK(std::abs(rho27(s, s)) == 0.0);
  }
  // diagonal
  for (int r = 0; r < 27; ++r)
    for (int c = 0; c < 27; ++c)
      if (r != c) CHECK(std::abs(rho27(r, c)) == 0.0);

  const CMatrix rho32 = mixed_initial_state(5, 2);
  CHECK((rho32 * rho32).trace().real() == doctest::Approx(1.0 / 32.0));
  CHECK(population(rho32, collective_state(5, "GHZ-")) == doctest::Approx(1.0 / 32.0));
}
