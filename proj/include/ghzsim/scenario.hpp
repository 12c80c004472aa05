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

#include <optional>
#include <string>
#include <vector>

#include "ghzsim/integrate.hpp"
#include "ghzsim/scheme1.hpp"
#include "ghzsim/scheme2.hpp"

namespace ghzsim {

enum class SchemeKind {
  Scheme1Full,
  Scheme1Effective,
  Scheme1Collective,
  Scheme2Full,
  Scheme2Effective,
};

std::string to_string(SchemeKind k);
SchemeKind scheme_kind_from_string(const std::string& s);

/// One complete simulation configuration, round-trippable through the flat
/// `key = value` document format (parse(render(s)) == s).
struct Scenario {
  SchemeKind scheme = SchemeKind::Scheme1Effective;
  std::string label;
  std::string units = "dimensionless";  // or "MHz_2pi"
  double t_end = 0.0;
  double dt = 0.0;        // 0 selects 0.05 / f_max
  int sample_stride = 0;  // 0 targets ~2000 samples
  /// "mixed_default", "named:<state>", or "weights:w0,w1,..." (full-basis diagonal).
  std::string initial_state = "mixed_default";
  /// Entries "P:<state>" (population), "F:<state>" (fidelity) or a bare state name.
  std::vector<std::string> observables;
  std::string output;  // CSV path, empty for none
  scheme1::Scheme1Params s1;
  scheme2::Scheme2Params s2;

  bool operator==(const Scenario&) const = default;
};

/// Parses a flat key-value document (UTF-8, `key = value` lines, `#`
/// comments, nested keys as `section.key`). Fills the scheme's default
/// resonance conditions and validates them; violations name the key.
Scenario parse_scenario(const std::string& text);
std::string render_scenario(const Scenario& s);

/// Resolves a named state ("GHZ-", "E1+", "D1", "+++", product words like
/// "rgg" or "011", ...) in the scenario's Hilbert space.
CVector resolve_state(SchemeKind scheme, int n_atoms, const std::string& name);

/// Everything needed to run a scenario.
struct BuiltScenario {
  std::optional<MasterEq> model;
  std::optional<Schedule> schedule;
  CMatrix rho0;
  std::vector<Observable> observables;
};
BuiltScenario build_scenario(const Scenario& s);

/// Builds and integrates. Does not write the CSV; callers decide.
TimeSeries run_scenario(const Scenario& s, const SampleHook& hook = {});

// ---- CSV ----

/// Header `t,<label1>,...`; one row per sample; 17-significant-digit
/// decimals; LF endings. time_scale divides the time column (unit
/// relabeling), with the column header time_label.
void write_csv(const std::string& path, const TimeSeries& ts, double time_scale = 1.0,
               const std::string& time_label = "t");
TimeSeries read_csv(const std::string& path);

/// Time-axis divisor for a scenario's declared units (1 for dimensionless;
/// 2 pi f_MHz for MHz_2pi, turning the time column into microseconds).
double time_scale_for(const Scenario& s);
std::string time_label_for(const Scenario& s);

// ---- comparison ----

struct ColumnDeviation {
  std::string label;
  double max_abs = 0.0;
  double t_at_max = 0.0;
};

struct CompareReport {
  std::vector<ColumnDeviation> columns;
  double max_abs = 0.0;
};

/// Per-observable max deviation over the common labels. Identical sample
/// grids are compared directly; otherwise the second series is linearly
/// interpolated onto the overlap. Disjoint time ranges are an error.
CompareReport compare(const TimeSeries& a, const TimeSeries& b);

// ---- named presets ----

struct Headline {
  std::string label;
  double value = 0.0;
  double reference = 0.0;
  double tolerance = 0.0;
  bool within() const;
};

struct PresetResult {
  std::string name;
  TimeSeries series;
  std::vector<Headline> headlines;
  std::string csv_path;
};

std::vector<std::string> preset_names();
/// The preset's primary scenario document (pair presets return the first leg).
Scenario preset_scenario(const std::string& name);
/// Runs the captioned configuration, writes `<output_dir>/<name>.csv` and
/// returns the series with its headline values and references.
PresetResult run_preset(const std::string& name, const std::string& output_dir = ".",
                        const SampleHook& hook = {});

}  // namespace ghzsim
