# Copyright 2026 The ghzsim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests of the python bindings: quick end-to-end calls of the main
operations, not a re-run of the C++ suites."""

import math

import numpy as np

import _ghzsim as gz


def test_operator_algebra():
    unit = gz.matrix_unit(3, 2, 0)
    assert unit.shape == (3, 3)
    assert unit[2, 0] == 1.0 and abs(unit).sum() == 1.0
    eye4 = gz.kron(np.eye(2, dtype=complex), np.eye(2, dtype=complex))
    assert np.allclose(eye4, np.eye(4))
    embedded = gz.embed_site(gz.matrix_unit(2, 1, 1), 0, 3)
    assert embedded.shape == (8, 8)
    assert embedded.trace() == 4.0


def test_decay_dynamics():
    p = gz.Scheme1Params()
    p.n_atoms = 3
    p.omega1 = p.omega3 = 0.05
    p.omega2 = 1.0
    p.gamma_eff_direct = 0.4
    p.fill_defaults()
    model = gz.build_effective(p)
    assert model.dim == 8

    states = gz.collective_states(3)
    ghz_minus = states["GHZ-"]
    rho0 = np.outer(ghz_minus, ghz_minus.conj())
    out = gz.integrate(model, rho0, t_end=5.0, observables=[("P:GHZ-", ghz_minus)])
    pop = out["columns"]["P:GHZ-"]
    assert abs(pop[0] - 1.0) < 1e-12
    assert abs(pop[-1] - 1.0) < 1e-2
    assert out["max_trace_drift"] < 1e-8


def test_steady_state_of_collective_model():
    p = gz.Scheme1Params()
    p.omega0 = 0.77
    p.omega1 = p.omega3 = 0.05
    p.omega2 = 1.0
    p.U = 300.0
    p.Gamma = 6.0
    p.fill_defaults()
    rho, lam_null, lam_second = gz.steady_state(gz.build_collective_model(p))
    ghz_minus = gz.collective_states(3)["GHZ-"]
    assert gz.fidelity(rho, ghz_minus) > 0.999
    assert lam_null <= 1e-8 < lam_second


def test_scheme2_pieces():
    assert math.isclose(
        gz.antiblockade_rate(1.0, 80.0), 12.0 * math.sqrt(2.0) / 6400.0, rel_tol=1e-12
    )
    p = gz.Scheme2Params()
    p.omega_a = 0.02
    p.omega_b = 1.0
    p.omega_p = 1.0
    p.delta1 = 300.0
    p.delta2 = 80.0
    p.gamma = 0.01
    p.N = 4
    p.T_total = 100.0
    p.fill_defaults()
    assert gz.verify_hs1_decomposition(p) < 1e-12

    sched = gz.build_switching_schedule(p, gz.ModelKind.Effective)
    ghz_minus = gz.collective_basis_s2()["GHZ-"]
    rho0 = gz.mixed_initial_state_6()
    out = gz.integrate_schedule(sched, rho0, t_end=100.0, observables=[("F:GHZ-", ghz_minus)])
    fid = out["columns"]["F:GHZ-"]
    assert fid[0] == 0.0
    assert fid[-1] > 0.0


def test_resonant_spectrum_contains_the_golden_detuning():
    spectrum = gz.resonant_spectrum(5, 1.0)
    assert min(abs(v - (1 + math.sqrt(5))) for v in spectrum) < 1e-10


def test_scenario_text_round_trip():
    text = gz.preset_scenario_text("fig8")
    assert "scheme = scheme1_effective" in text
    assert gz.parse_scenario_file(text) == text


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
