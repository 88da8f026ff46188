/*
 * Copyright 2026 The lowcost-explore Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Command-line front end: run scenarios, export artifacts from traces and
// check that traces replay.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "explore/cli/commands.h"

namespace {

template <typename T>
void AddOverride(CLI::App* app, const std::string& flag, std::optional<T>* slot,
                 const std::string& help) {
  app->add_option_function<T>(
      flag, [slot](const T& value) { *slot = value; }, help);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace explore::cli;  // NOLINT(build/namespaces)

  CLI::App app{"Frontier exploration simulator"};
  app.require_subcommand(1);

  RunOptions run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a scenario");
  run_cmd->add_option("scenario", run.scenario,
                      "Builtin scenario name or scenario file")
      ->required();
  AddOverride(run_cmd, "--plan-hz", &run.overrides.plan_hz, "Planning rate");
  AddOverride(run_cmd, "--sense-hz", &run.overrides.sense_hz, "Sensing rate");
  AddOverride(run_cmd, "--control-hz", &run.overrides.control_hz,
              "Control rate");
  AddOverride(run_cmd, "--seed", &run.overrides.seed, "Sensor noise seed");
  AddOverride(run_cmd, "--attraction-rate", &run.overrides.attraction_rate,
              "Fixed attraction rate (0 = by curvature)");
  AddOverride(run_cmd, "--step-size", &run.overrides.step_size,
              "Tracker step size");
  AddOverride(run_cmd, "--epsilon", &run.overrides.epsilon,
              "Clustering distance");
  AddOverride(run_cmd, "--duration", &run.overrides.duration,
              "Simulated time limit in seconds");
  run_cmd->add_option("--out", run.out_dir,
                      "Output directory (default $EXPLORE_OUTPUT_ROOT/<name>)");
  run_cmd->add_option("--filter-n", run.filter_n,
                      "Keep every n-th point of the point map")
      ->capture_default_str();

  ExportOptions exp;
  CLI::App* export_cmd =
      app.add_subcommand("export", "Derive an artifact from a trace");
  const std::map<std::string, ExportKind> kinds{
      {"trajectory-table", ExportKind::kTrajectoryTable},
      {"point-map", ExportKind::kPointMap},
      {"field-svg", ExportKind::kFieldSvg}};
  export_cmd->add_option("kind", exp.kind, "trajectory-table | point-map | field-svg")
      ->required()
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  export_cmd->add_option("trace", exp.trace_path, "Trace file")->required();
  export_cmd->add_option("-o,--out", exp.out_path, "Output file (default stdout)");
  export_cmd->add_option("--tick", exp.tick, "Control tick for field-svg");
  export_cmd->add_option("--filter-n", exp.filter_n,
                         "Keep every n-th point of the point map")
      ->capture_default_str();

  std::string replay_trace;
  CLI::App* replay_cmd =
      app.add_subcommand("replay", "Re-run a trace and compare");
  replay_cmd->add_option("trace", replay_trace, "Trace file")->required();

  CLI::App* list_cmd =
      app.add_subcommand("list-scenarios", "List builtin scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  if (*run_cmd) return RunCommand(run, std::cout, std::cerr);
  if (*export_cmd) return ExportCommand(exp, std::cout, std::cerr);
  if (*replay_cmd) return ReplayCommand(replay_trace, std::cout, std::cerr);
  if (*list_cmd) return ListScenariosCommand(std::cout);
  return kExitConfigError;
}
