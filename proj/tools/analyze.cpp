// Copyright 2026 The lindbladlab authors
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

// Command-line front end: run one analysis scenario from a JSON config and
// emit a machine-readable report.
//
// Exit codes: 0 success, 1 invalid input or config, 2 a solver reported
// inapplicable and --fail-on-inapplicable was given, 3 numerical failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lindbladlab/core.hpp"
#include "lindbladlab/scenario.hpp"

namespace {

int run(int argc, char** argv) {
  CLI::App app{"Boundary-driven Lindblad generator analysis"};
  app.name("analyze");

  std::string scenario_name;
  std::string config_path;
  std::string output_path;
  std::vector<std::string> tol_overrides;
  std::uint64_t seed = 0;
  bool seed_given = false;
  bool fail_on_inapplicable = false;
  bool want_summary = false;

  app.add_option("scenario", scenario_name,
                 "One of: steady-state, uniqueness, no-go, decompose, chain, sweep")
      ->required();
  app.add_option("--config", config_path, "JSON configuration file")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--output", output_path, "Write the JSON report here instead of stdout");
  app.add_option("--seed", seed, "Override the config seed")->each([&](const std::string&) {
    seed_given = true;
  });
  app.add_option("--tol", tol_overrides,
                 "Override a named tolerance, e.g. --tol product=1e-6 "
                 "(names: stationarity, rank, product, gibbs)");
  app.add_flag("--fail-on-inapplicable", fail_on_inapplicable,
               "Exit with status 2 when any uniqueness verdict is inapplicable");
  app.add_flag("--summary", want_summary, "Print a plain-text digest as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      app.exit(e);
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  lindbladlab::ScenarioConfig config = lindbladlab::load_config(config_path);
  const lindbladlab::ScenarioKind requested =
      lindbladlab::scenario_kind_from_string(scenario_name);
  if (requested != config.scenario)
    throw lindbladlab::ValidationError("scenario '" + scenario_name +
                                       "' does not match the config's scenario '" +
                                       lindbladlab::to_string(config.scenario) + "'");
  if (seed_given) config.seed = seed;
  if (!output_path.empty()) config.output = output_path;
  for (const std::string& spec : tol_overrides) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size())
      throw lindbladlab::ValidationError("--tol expects name=value, got '" + spec + "'");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(spec.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw lindbladlab::ValidationError("--tol value in '" + spec + "' is not a number");
    }
    if (used != spec.size() - eq - 1)
      throw lindbladlab::ValidationError("--tol value in '" + spec + "' is not a number");
    config.tolerances.set(spec.substr(0, eq), value);
  }

  const lindbladlab::AnalysisReport report = lindbladlab::run_scenario(config);
  const nlohmann::json j = report;

  if (!config.output.empty()) {
    std::ofstream out(config.output, std::ios::binary | std::ios::trunc);
    if (!out)
      throw lindbladlab::ValidationError("cannot open '" + config.output + "' for writing");
    out << j.dump(2) << "\n";
    if (!out) throw lindbladlab::ValidationError("write to '" + config.output + "' failed");
    if (want_summary) std::cout << lindbladlab::summarize(report);
  } else {
    std::cout << j.dump(2) << "\n";
    if (want_summary) std::cerr << lindbladlab::summarize(report);
  }

  if (fail_on_inapplicable && lindbladlab::any_inapplicable(report)) {
    std::cerr << "error: a uniqueness criterion was inapplicable to this system\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lindbladlab::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const lindbladlab::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
