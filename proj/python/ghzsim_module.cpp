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

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ghzsim/integrate.hpp"
#include "ghzsim/operators.hpp"
#include "ghzsim/scenario.hpp"
#include "ghzsim/steady_state.hpp"

namespace py = pybind11;
using namespace ghzsim;

namespace {

py::array_t<Complex> to_numpy(const CMatrix& m) {
  py::array_t<Complex> out({m.rows(), m.cols()});
  std::copy(m.data(), m.data() + size_t(m.rows()) * m.cols(), out.mutable_data());
  return out;
}

CMatrix from_numpy(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw ConfigError("expected a 2-d array");
  CMatrix m(int(a.shape(0)), int(a.shape(1)));
  std::copy(a.data(), a.data() + a.size(), m.data());
  return m;
}

std::vector<Observable> make_observables(
    const std::vector<std::pair<std::string, CVector>>& specs) {
  std::vector<Observable> out;
  for (const auto& [label, state] : specs) {
    if (!label.empty() && label.rfind("F:", 0) == 0) {
      out.push_back(Observable::fidelity(label, state));
    } else {
      out.push_back(Observable::population(label, state));
    }
  }
  return out;
}

py::dict series_to_dict(const TimeSeries& ts) {
  py::dict d;
  d["t"] = py::array_t<double>(py::ssize_t(ts.times.size()), ts.times.data());
  py::dict cols;
  for (size_t k = 0; k < ts.labels.size(); ++k)
    cols[py::str(ts.labels[k])] =
        py::array_t<double>(py::ssize_t(ts.columns[k].size()), ts.columns[k].data());
  d["columns"] = cols;
  d["max_trace_drift"] = ts.max_trace_drift;
  d["max_hermiticity_drift"] = ts.max_hermiticity_drift;
  d["final_state"] = to_numpy(ts.final_state);
  return d;
}

}  // namespace

PYBIND11_MODULE(_ghzsim, m) {
  m.doc() = "Dissipative GHZ-state preparation simulator for Rydberg-atom registers";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<NumericalError>(m, "NumericalFailure", PyExc_RuntimeError);

  // ---- operator algebra ----
  m.def("matrix_unit",
        [](int d, int x, int y) { return to_numpy(matrix_unit(d, x, y)); },
        py::arg("d"), py::arg("x"), py::arg("y"));
  m.def("kron",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a,
           const py::array_t<Complex, py::array::c_style | py::array::forcecast>& b) {
          return to_numpy(kron(from_numpy(a), from_numpy(b)));
        });
  m.def("embed_site",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& local,
           int site, int n_sites) { return to_numpy(embed_site(from_numpy(local), site, n_sites)); },
        py::arg("local"), py::arg("site"), py::arg("n_sites"));

  // ---- master equations ----
  py::class_<MasterEq>(m, "MasterEq")
      .def_readonly("dim", &MasterEq::dim)
      .def_readonly("label", &MasterEq::label)
      .def_readonly("f_max", &MasterEq::f_max)
      .def("hamiltonian", [](const MasterEq& me, double t) { return to_numpy(me.hamiltonian(t)); },
           py::arg("t"))
      .def("__repr__", [](const MasterEq& me) {
        return "<MasterEq '" + me.label + "' dim=" + std::to_string(me.dim) + ">";
      });
  py::class_<Schedule>(m, "Schedule")
      .def_readonly("label", &Schedule::label)
      .def_readonly("repeats", &Schedule::repeats)
      .def("total_time", &Schedule::total_time);

  // ---- scheme 1 ----
  py::class_<scheme1::GaussianPulse>(m, "GaussianPulse")
      .def(py::init<>())
      .def_readwrite("amp", &scheme1::GaussianPulse::amp)
      .def_readwrite("center", &scheme1::GaussianPulse::center)
      .def_readwrite("width", &scheme1::GaussianPulse::width);
  py::class_<scheme1::Scheme1Params>(m, "Scheme1Params")
      .def(py::init<>())
      .def_readwrite("n_atoms", &scheme1::Scheme1Params::n_atoms)
      .def_readwrite("omega0", &scheme1::Scheme1Params::omega0)
      .def_readwrite("omega1", &scheme1::Scheme1Params::omega1)
      .def_readwrite("omega2", &scheme1::Scheme1Params::omega2)
      .def_readwrite("omega3", &scheme1::Scheme1Params::omega3)
      .def_readwrite("delta1", &scheme1::Scheme1Params::delta1)
      .def_readwrite("delta2", &scheme1::Scheme1Params::delta2)
      .def_readwrite("delta3", &scheme1::Scheme1Params::delta3)
      .def_readwrite("U", &scheme1::Scheme1Params::interaction_u)
      .def_readwrite("Gamma", &scheme1::Scheme1Params::gamma_e)
      .def_readwrite("gamma_r", &scheme1::Scheme1Params::gamma_r)
      .def_readwrite("gamma_eff_direct", &scheme1::Scheme1Params::gamma_eff_direct)
      .def_readwrite("pulse", &scheme1::Scheme1Params::pulse)
      .def_readwrite("constraints_overridden", &scheme1::Scheme1Params::constraints_overridden)
      .def("fill_defaults", &scheme1::Scheme1Params::fill_defaults)
      .def("gamma_eff", &scheme1::Scheme1Params::gamma_eff);
  m.def("build_full_3atom", &scheme1::build_full_3atom);
  m.def("build_effective", &scheme1::build_effective);
  m.def("build_collective_model", &scheme1::build_collective_model);
  m.def("collective_states", [](int n) {
    py::dict d;
    for (const auto& [name, vec] : scheme1::collective_states(n))
      d[py::str(name)] = py::array_t<Complex>(py::ssize_t(vec.size()), vec.data());
    return d;
  });
  m.def("resonant_spectrum", &scheme1::resonant_spectrum, py::arg("n_atoms"), py::arg("omega2"));
  m.def("gamma_eff_oracle",
        [](double omega0, double gamma_e, double t_end, bool allow_outside) {
          const auto fit = scheme1::gamma_eff_oracle(omega0, gamma_e, t_end, allow_outside);
          return py::make_tuple(fit.fitted, fit.closed_form);
        },
        py::arg("omega0"), py::arg("gamma"), py::arg("t_end"),
        py::arg("allow_outside_regime") = false);
  m.def("mixed_initial_state",
        [](int n, int d) { return to_numpy(scheme1::mixed_initial_state(n, d)); },
        py::arg("n_atoms"), py::arg("local_dim"));

  // ---- scheme 2 ----
  py::class_<scheme2::Scheme2Params>(m, "Scheme2Params")
      .def(py::init<>())
      .def_readwrite("omega_a", &scheme2::Scheme2Params::omega_a)
      .def_readwrite("omega_b", &scheme2::Scheme2Params::omega_b)
      .def_readwrite("omega_p", &scheme2::Scheme2Params::omega_p)
      .def_readwrite("delta1", &scheme2::Scheme2Params::delta1)
      .def_readwrite("delta2", &scheme2::Scheme2Params::delta2)
      .def_readwrite("U_rr", &scheme2::Scheme2Params::u_rr)
      .def_readwrite("U_pp", &scheme2::Scheme2Params::u_pp)
      .def_readwrite("gamma", &scheme2::Scheme2Params::gamma)
      .def_readwrite("N", &scheme2::Scheme2Params::switch_count)
      .def_readwrite("T_total", &scheme2::Scheme2Params::total_time)
      .def_readwrite("constraints_overridden", &scheme2::Scheme2Params::constraints_overridden)
      .def("fill_defaults", &scheme2::Scheme2Params::fill_defaults);
  py::enum_<scheme2::ModelKind>(m, "ModelKind")
      .value("Full", scheme2::ModelKind::Full)
      .value("Effective", scheme2::ModelKind::Effective);
  m.def("build_step_full", &scheme2::build_step_full, py::arg("params"), py::arg("step"));
  m.def("build_step_effective", &scheme2::build_step_effective, py::arg("params"),
        py::arg("step"));
  m.def("build_switching_schedule", &scheme2::build_switching_schedule, py::arg("params"),
        py::arg("kind"));
  m.def("collective_basis_s2", [] {
    py::dict d;
    for (const auto& [name, vec] : scheme2::collective_basis_s2())
      d[py::str(name)] = py::array_t<Complex>(py::ssize_t(vec.size()), vec.data());
    return d;
  });
  m.def("antiblockade_rate", &scheme2::antiblockade_rate, py::arg("omega_p"), py::arg("delta2"));
  m.def("verify_hs1_decomposition", [](const scheme2::Scheme2Params& p) {
    return scheme2::verify_hs1_decomposition(p).max_abs_deviation;
  });
  m.def("mixed_initial_state_6", [] { return to_numpy(scheme2::mixed_initial_state_6()); });

  // ---- engine ----
  m.def("rhs",
        [](const MasterEq& me,
           const py::array_t<Complex, py::array::c_style | py::array::forcecast>& rho, double t) {
          return to_numpy(rhs(me, from_numpy(rho), t));
        },
        py::arg("model"), py::arg("rho"), py::arg("t"));
  m.def("integrate",
        [](const MasterEq& me,
           const py::array_t<Complex, py::array::c_style | py::array::forcecast>& rho0,
           double t_end, double dt,
           const std::vector<std::pair<std::string, CVector>>& observables, int stride) {
          return series_to_dict(integrate(me, from_numpy(rho0), t_end, dt,
                                          make_observables(observables), stride));
        },
        py::arg("model"), py::arg("rho0"), py::arg("t_end"), py::arg("dt") = 0.0,
        py::arg("observables") = std::vector<std::pair<std::string, CVector>>{},
        py::arg("sample_stride") = 0);
  m.def("integrate_schedule",
        [](const Schedule& sched,
           const py::array_t<Complex, py::array::c_style | py::array::forcecast>& rho0,
           double t_end, double dt,
           const std::vector<std::pair<std::string, CVector>>& observables, int stride) {
          return series_to_dict(integrate(sched, from_numpy(rho0), t_end, dt,
                                          make_observables(observables), stride));
        },
        py::arg("schedule"), py::arg("rho0"), py::arg("t_end"), py::arg("dt") = 0.0,
        py::arg("observables") = std::vector<std::pair<std::string, CVector>>{},
        py::arg("sample_stride") = 0);
  m.def("steady_state", [](const MasterEq& me) {
    const auto ss = steady_state(me);
    return py::make_tuple(to_numpy(ss.rho), ss.lambda_null, ss.lambda_second);
  });
  m.def("population",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& rho,
           const CVector& state) { return population(from_numpy(rho), state); });
  m.def("fidelity",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& rho,
           const CVector& state) { return fidelity(from_numpy(rho), state); });
  m.def("check_state",
        [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& rho,
           double tol) {
          const auto d = check_state(from_numpy(rho), tol);
          py::dict out;
          out["trace_error"] = d.trace_error;
          out["hermiticity_error"] = d.hermiticity_error;
          out["min_eigenvalue"] = d.min_eigenvalue;
          out["ok"] = d.ok;
          return out;
        },
        py::arg("rho"), py::arg("tol") = 1e-8);

  // ---- scenarios and presets ----
  m.def("parse_scenario_file", [](const std::string& text) {
    const Scenario s = parse_scenario(text);
    return render_scenario(s);
  });
  m.def("run_scenario_text", [](const std::string& text) {
    return series_to_dict(run_scenario(parse_scenario(text)));
  });
  m.def("preset_names", &preset_names);
  m.def("preset_scenario_text",
        [](const std::string& name) { return render_scenario(preset_scenario(name)); });
  m.def("run_preset",
        [](const std::string& name, const std::string& output_dir) {
          const auto res = run_preset(name, output_dir);
          py::dict d;
          d["name"] = res.name;
          d["csv_path"] = res.csv_path;
          py::list heads;
          for (const auto& h : res.headlines) {
            py::dict hd;
            hd["label"] = h.label;
            hd["value"] = h.value;
            hd["reference"] = h.reference;
            hd["tolerance"] = h.tolerance;
            hd["within"] = h.within();
            heads.append(hd);
          }
          d["headlines"] = heads;
          d["series"] = series_to_dict(res.series);
          return d;
        },
        py::arg("name"), py::arg("output_dir") = ".");
}
