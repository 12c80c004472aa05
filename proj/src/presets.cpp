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

#include <cmath>

#include "ghzsim/scenario.hpp"

namespace ghzsim {

namespace {

// Reference headline values the presets print alongside their results.
constexpr double kFig2GhzMinus = 0.9954;
constexpr double kFig2GhzPlus = 0.0030;
constexpr double kFig2GammaGhzMinus = 0.7579;
constexpr double kFig3bConstant = 0.9946;
constexpr double kFig3bPulsed = 0.9981;
constexpr double kFig6SubspaceSum = 0.9958;
constexpr double kFig7Fidelity = 0.9757;
constexpr double kFig8GhzMinus = 0.9927;
constexpr double kFig8GhzPlus = 0.0053;

Scenario fig2_base() {
  Scenario s;
  s.scheme = SchemeKind::Scheme1Full;
  s.label = "fig2";
  s.s1.n_atoms = 3;
  s.s1.omega0 = 0.77;
  s.s1.omega1 = 0.05;
  s.s1.omega2 = 1.0;
  s.s1.omega3 = 0.05;
  s.s1.interaction_u = 300.0;
  s.s1.gamma_e = 6.0;
  s.s1.fill_defaults();
  s.t_end = 200.0;
  // The GHZ coherence of this model rotates at 3U = 900 omega2; 2.5e-5 keeps
  // the integrator's error small enough that halving the step moves no
  // sampled observable by more than 1e-5.
  s.dt = 2.5e-5;
  s.sample_stride = 4000;  // one sample per 0.1/omega2
  s.initial_state = "mixed_default";
  s.observables = {"P:GHZ-", "P:GHZ+"};
  return s;
}

Scenario fig6_base() {
  Scenario s;
  s.scheme = SchemeKind::Scheme2Effective;
  s.label = "fig6";
  s.s2.omega_a = 0.02;
  s.s2.omega_b = 1.0;
  s.s2.omega_p = 0.0;
  s.s2.delta1 = 300.0;
  s.s2.delta2 = 80.0;
  s.s2.gamma = 0.01;
  s.s2.switch_count = 10;
  s.s2.total_time = 50000.0;
  s.s2.fill_defaults();
  s.t_end = 50000.0;
  s.dt = 2.5;
  s.sample_stride = 10;
  s.initial_state = "mixed_default";
  s.observables = {"P:000", "P:111"};
  return s;
}

TimeSeries merge_pair(const TimeSeries& a, const TimeSeries& b, const std::string& suffix_a,
                      const std::string& suffix_b) {
  if (a.times.size() != b.times.size())
    throw NumericalError("preset: paired runs produced different sample counts");
  for (size_t i = 0; i < a.times.size(); ++i)
    if (std::abs(a.times[i] - b.times[i]) > 1e-9)
      throw NumericalError("preset: paired runs sample grids disagree");
  TimeSeries out;
  out.times = a.times;
  for (size_t k = 0; k < a.labels.size(); ++k) {
    out.labels.push_back(a.labels[k] + ":" + suffix_a);
    out.columns.push_back(a.columns[k]);
  }
  for (size_t k = 0; k < b.labels.size(); ++k) {
    out.labels.push_back(b.labels[k] + ":" + suffix_b);
    out.columns.push_back(b.columns[k]);
  }
  out.max_trace_drift = std::max(a.max_trace_drift, b.max_trace_drift);
  out.max_hermiticity_drift = std::max(a.max_hermiticity_drift, b.max_hermiticity_drift);
  out.final_state = a.final_state;
  return out;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig2", "fig2_gamma", "fig3b", "fig6", "fig7", "fig7_full_truncated", "fig8"};
}

Scenario preset_scenario(const std::string& name) {
  if (name == "fig2") return fig2_base();
  if (name == "fig2_gamma") {
    Scenario s = fig2_base();
    s.label = "fig2_gamma";
    s.s1.gamma_r = 0.01;
    return s;
  }
  if (name == "fig3b") {  // the constant-drive leg; the pulsed leg adds the envelope
    Scenario s = fig2_base();
    s.label = "fig3b";
    s.s1.omega1 = 0.1;
    s.s1.omega3 = 0.1;
    s.t_end = 250.0;
    s.dt = 1e-4;  // the 0.005-wide headline comparison tolerates a coarser step
    s.sample_stride = 1000;
    s.observables = {"P:GHZ-"};
    return s;
  }
  if (name == "fig6") return fig6_base();
  if (name == "fig7") {
    Scenario s = fig6_base();
    s.label = "fig7";
    s.s2.omega_p = 1.0;
    s.s2.switch_count = 64;
    s.observables = {"F:GHZ-"};
    return s;
  }
  if (name == "fig7_full_truncated") {
    Scenario s = preset_scenario("fig7");
    s.label = "fig7_full_truncated";
    s.scheme = SchemeKind::Scheme2Full;
    s.t_end = 500.0;
    // dt f_max = 0.075: inside the step rule, and the fast interaction-shifted
    // coherences it underresolves carry ~1e-5 population at these drives.
    s.dt = 2.5e-4;
    s.sample_stride = 10000;  // one sample per 2.5/omega_b, aligned with fig7
    return s;
  }
  if (name == "fig8") {
    Scenario s;
    s.scheme = SchemeKind::Scheme1Effective;
    s.label = "fig8";
    s.s1.n_atoms = 5;
    s.s1.omega1 = 0.02;
    s.s1.omega2 = 1.0;
    s.s1.omega3 = 0.02;
    s.s1.gamma_eff_direct = 0.4;
    s.s1.fill_defaults();
    s.t_end = 600.0;
    s.initial_state = "mixed_default";
    s.observables = {"P:GHZ-", "P:GHZ+"};
    return s;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

PresetResult run_preset(const std::string& name, const std::string& output_dir,
                        const SampleHook& hook) {
  PresetResult res;
  res.name = name;
  const Scenario primary = preset_scenario(name);

  if (name == "fig3b") {
    Scenario pulsed = primary;
    pulsed.s1.pulse = scheme1::GaussianPulse{0.1, 110.0, 90.0};
    const TimeSeries constant_run = run_scenario(primary, hook);
    const TimeSeries pulsed_run = run_scenario(pulsed, hook);
    res.series = merge_pair(constant_run, pulsed_run, "constant", "pulsed");
    res.headlines.push_back({"P:GHZ-:constant at t_end", constant_run.column("P:GHZ-").back(),
                             kFig3bConstant, 0.005});
    res.headlines.push_back(
        {"P:GHZ-:pulsed at t_end", pulsed_run.column("P:GHZ-").back(), kFig3bPulsed, 0.005});
  } else if (name == "fig7_full_truncated") {
    Scenario effective = preset_scenario("fig7");
    effective.t_end = primary.t_end;
    effective.dt = 2.5;
    effective.sample_stride = 1;
    const TimeSeries full_run = run_scenario(primary, hook);
    const TimeSeries eff_run = run_scenario(effective, hook);
    res.series = merge_pair(full_run, eff_run, "full", "effective");
    double max_dev = 0.0;
    for (size_t i = 0; i < full_run.times.size(); ++i)
      max_dev = std::max(max_dev, std::abs(full_run.column("F:GHZ-")[i] -
                                           eff_run.column("F:GHZ-")[i]));
    res.headlines.push_back({"max |F_full - F_effective| over [0,500]", max_dev, 0.0, 0.02});
  } else {
    res.series = run_scenario(primary, hook);
    if (name == "fig2") {
      res.headlines.push_back(
          {"P:GHZ- at t_end", res.series.column("P:GHZ-").back(), kFig2GhzMinus, 0.005});
      res.headlines.push_back(
          {"P:GHZ+ at t_end", res.series.column("P:GHZ+").back(), kFig2GhzPlus, 0.003});
    } else if (name == "fig2_gamma") {
      res.headlines.push_back(
          {"P:GHZ- at t_end", res.series.column("P:GHZ-").back(), kFig2GammaGhzMinus, 0.01});
    } else if (name == "fig6") {
      const double sum =
          res.series.column("P:000").back() + res.series.column("P:111").back();
      res.headlines.push_back({"P:000 + P:111 at t_end", sum, kFig6SubspaceSum, 0.01});
    } else if (name == "fig7") {
      res.headlines.push_back(
          {"F:GHZ- at t_end", res.series.column("F:GHZ-").back(), kFig7Fidelity, 0.01});
    } else if (name == "fig8") {
      res.headlines.push_back(
          {"P:GHZ- at t_end", res.series.column("P:GHZ-").back(), kFig8GhzMinus, 0.01});
      res.headlines.push_back(
          {"P:GHZ+ at t_end", res.series.column("P:GHZ+").back(), kFig8GhzPlus, 0.005});
    }
  }

  res.csv_path = output_dir + "/" + name + ".csv";
  write_csv(res.csv_path, res.series, time_scale_for(primary), time_label_for(primary));
  return res;
}

bool Headline::within() const { return std::abs(value - reference) <= tolerance; }

}  // namespace ghzsim
