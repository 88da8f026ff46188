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


#ifndef EXPLORE_CLI_COMMANDS_H_
#define EXPLORE_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "absl/status/statusor.h"
#include "explore/sim/scenario.h"

namespace explore::cli {

// Process exit codes of the explore tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUnexpectedOutcome = 1,
  kExitConfigError = 2,
  kExitCollision = 3,
  kExitReplayMismatch = 4,
};

inline constexpr char kOutputRootEnv[] = "EXPLORE_OUTPUT_ROOT";
inline constexpr char kDefaultOutputRoot[] = "explore-out";

struct NamedScenario {
  std::string name;
  sim::Scenario scenario;
};

// `spec` is a builtin scenario name or a path to a scenario file; the name of
// a file scenario is its stem.
absl::StatusOr<NamedScenario> LoadScenario(const std::string& spec);

struct RunOverrides {
  std::optional<double> plan_hz;
  std::optional<double> sense_hz;
  std::optional<double> control_hz;
  std::optional<uint64_t> seed;
  std::optional<double> attraction_rate;
  std::optional<double> step_size;
  std::optional<double> epsilon;
  std::optional<double> duration;
};

// Applies the overrides and re-validates.
absl::Status ApplyOverrides(const RunOverrides& overrides,
                            sim::Scenario* scenario);

struct RunOptions {
  std::string scenario;
  RunOverrides overrides;
  // Output directory; empty means $EXPLORE_OUTPUT_ROOT/<name>.
  std::string out_dir;
  size_t filter_n = 10;
};

// Each command writes progress to `out`, problems to `err`, and returns an
// ExitCode.
int RunCommand(const RunOptions& options, std::ostream& out,
               std::ostream& err);

enum class ExportKind { kTrajectoryTable, kPointMap, kFieldSvg };

struct ExportOptions {
  ExportKind kind = ExportKind::kTrajectoryTable;
  std::string trace_path;
  std::string out_path;  // empty: write to `out`
  int64_t tick = 0;      // field-svg only
  size_t filter_n = 10;  // point-map only
};

int ExportCommand(const ExportOptions& options, std::ostream& out,
                  std::ostream& err);

int ReplayCommand(const std::string& trace_path, std::ostream& out,
                  std::ostream& err);

int ListScenariosCommand(std::ostream& out);

}  // namespace explore::cli

#endif  // EXPLORE_CLI_COMMANDS_H_
