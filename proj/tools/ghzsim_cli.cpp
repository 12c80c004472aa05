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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ghzsim/scenario.hpp"
#include "ghzsim/steady_state.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ghzsim::ConfigError("cannot open scenario file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_headlines(const ghzsim::PresetResult& res) {
  for (const auto& h : res.headlines) {
    std::printf("%-40s %12.6f   (reference %.4f +- %.4f)  %s\n", h.label.c_str(), h.value,
                h.reference, h.tolerance, h.within() ? "ok" : "OUTSIDE");
  }
  std::printf("wrote %s\n", res.csv_path.c_str());
}

int run_simulate(const std::string& file, const std::string& output_override) {
  ghzsim::Scenario s = ghzsim::parse_scenario(slurp(file));
  if (!output_override.empty()) s.output = output_override;
  const ghzsim::TimeSeries ts = ghzsim::run_scenario(s);
  if (!s.observables.empty()) {
    std::printf("%-24s at t_end = %.17g\n", "observable", ts.times.back());
    for (size_t k = 0; k < ts.labels.size(); ++k)
      std::printf("  %-22s %.10f\n", ts.labels[k].c_str(), ts.columns[k].back());
  }
  std::printf("trace drift %.3e, hermiticity drift %.3e\n", ts.max_trace_drift,
              ts.max_hermiticity_drift);
  if (!s.output.empty()) {
    ghzsim::write_csv(s.output, ts, ghzsim::time_scale_for(s), ghzsim::time_label_for(s));
    std::printf("wrote %s\n", s.output.c_str());
  }
  return 0;
}

int run_steady(const std::string& file) {
  const ghzsim::Scenario s = ghzsim::parse_scenario(slurp(file));
  const ghzsim::BuiltScenario built = ghzsim::build_scenario(s);
  if (!built.model)
    throw ghzsim::ConfigError("steady: scenario must describe a single master equation");
  const auto result = ghzsim::steady_state(*built.model);
  std::printf("null eigenvalue magnitude        %.3e\n", result.lambda_null);
  std::printf("second eigenvalue magnitude      %.3e\n", result.lambda_second);
  for (const auto& obs : built.observables) {
    std::printf("%-24s %.10f\n", obs.label.c_str(),
                obs.evaluate(result.rho, 0.0, built.model->observable_frame));
  }
  return 0;
}

int run_compare(const std::string& a_path, const std::string& b_path) {
  const ghzsim::TimeSeries a = ghzsim::read_csv(a_path);
  const ghzsim::TimeSeries b = ghzsim::read_csv(b_path);
  const ghzsim::CompareReport rep = ghzsim::compare(a, b);
  for (const auto& c : rep.columns)
    std::printf("%-24s max |delta| = %.6e at t = %.17g\n", c.label.c_str(), c.max_abs,
                c.t_at_max);
  std::printf("overall max |delta| = %.6e\n", rep.max_abs);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dissipative GHZ-state preparation simulator for Rydberg-atom registers"};
  app.require_subcommand(1);

  std::string scenario_file, output_override;
  auto* simulate = app.add_subcommand("simulate", "Integrate a scenario file and write its CSV");
  simulate->add_option("scenario", scenario_file, "scenario document")->required();
  simulate->add_option("--output", output_override, "override the scenario's output path");

  std::string preset_name, output_dir = ".";
  bool list_presets = false, show_preset = false;
  auto* preset = app.add_subcommand("preset", "Run a named preset configuration");
  preset->add_option("name", preset_name, "preset name");
  preset->add_flag("--list", list_presets, "list preset names");
  preset->add_flag("--show", show_preset, "print the preset's scenario document");
  preset->add_option("--output-dir", output_dir, "directory for the CSV");

  std::string steady_file;
  auto* steady = app.add_subcommand("steady", "Solve a time-independent scenario's steady state");
  steady->add_option("scenario", steady_file, "scenario document")->required();

  double omega0 = 0.0, gamma_e = 0.0, oracle_t_end = 0.0;
  bool outside = false;
  auto* oracle = app.add_subcommand("oracle", "Independent checks of derived rates");
  auto* gamma_eff = oracle->add_subcommand("gamma-eff", "Fit the engineered decay rate");
  gamma_eff->add_option("--omega0", omega0, "coupling to the short-lived level")->required();
  gamma_eff->add_option("--gamma", gamma_e, "decay rate of the short-lived level")->required();
  gamma_eff->add_option("--t-end", oracle_t_end, "integration horizon (default 12 / closed form)");
  gamma_eff->add_flag("--allow-outside-regime", outside, "skip the Gamma >= 5 omega0 guard");

  std::string csv_a, csv_b;
  auto* comp = app.add_subcommand("compare", "Per-observable max deviation of two CSV files");
  comp->add_option("a", csv_a, "first CSV")->required();
  comp->add_option("b", csv_b, "second CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) return run_simulate(scenario_file, output_override);
    if (preset->parsed()) {
      if (list_presets) {
        for (const auto& n : ghzsim::preset_names()) std::printf("%s\n", n.c_str());
        return 0;
      }
      if (preset_name.empty())
        throw ghzsim::ConfigError("preset: give a name or --list");
      if (show_preset) {
        std::printf("%s", ghzsim::render_scenario(ghzsim::preset_scenario(preset_name)).c_str());
        return 0;
      }
      print_headlines(ghzsim::run_preset(preset_name, output_dir));
      return 0;
    }
    if (steady->parsed()) return run_steady(steady_file);
    if (gamma_eff->parsed()) {
      const double horizon =
          oracle_t_end > 0.0 ? oracle_t_end : 12.0 * gamma_e / (4.0 * omega0 * omega0);
      const auto fit = ghzsim::scheme1::gamma_eff_oracle(omega0, gamma_e, horizon, outside);
      std::printf("fitted rate       %.6e\n", fit.fitted);
      std::printf("closed form       %.6e   (4 omega0^2 / Gamma)\n", fit.closed_form);
      std::printf("ratio             %.4f\n", fit.fitted / fit.closed_form);
      return 0;
    }
    if (comp->parsed()) return run_compare(csv_a, csv_b);
  } catch (const ghzsim::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return kExitConfig;
  } catch (const ghzsim::NumericalError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  }
  return 0;
}
