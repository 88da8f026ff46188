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


#include "explore/cli/commands.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "absl/time/clock.h"
#include "absl/time/time.h"
#include "explore/cli/exports.h"
#include "explore/cli/report.h"
#include "explore/sim/trace.h"

namespace explore::cli {
namespace {

namespace fs = std::filesystem;

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError("cannot write " + path.string());
  out << content;
  out.close();
  if (!out) return absl::DataLossError("write failed: " + path.string());
  return absl::OkStatus();
}

absl::StatusOr<sim::Trace> LoadTrace(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  return sim::ParseTrace(*text);
}

fs::path OutputDir(const RunOptions& options, const std::string& name) {
  if (!options.out_dir.empty()) return options.out_dir;
  const char* root = std::getenv(kOutputRootEnv);
  return fs::path(root != nullptr && *root != '\0' ? root : kDefaultOutputRoot) /
         name;
}

}  // namespace

absl::StatusOr<NamedScenario> LoadScenario(const std::string& spec) {
  if (std::optional<std::string_view> text = sim::BuiltinScenarioText(spec);
      text.has_value()) {
    absl::StatusOr<sim::Scenario> scenario = sim::ParseScenario(*text);
    if (!scenario.ok()) return scenario.status();
    return NamedScenario{spec, *std::move(scenario)};
  }
  absl::StatusOr<std::string> text = ReadFile(spec);
  if (!text.ok()) {
    return absl::NotFoundError(
        "'" + spec + "' is neither a builtin scenario nor a readable file");
  }
  absl::StatusOr<sim::Scenario> scenario = sim::ParseScenario(*text);
  if (!scenario.ok()) {
    return absl::InvalidArgumentError(
        spec + ": " + std::string(scenario.status().message()));
  }
  return NamedScenario{fs::path(spec).stem().string(), *std::move(scenario)};
}

absl::Status ApplyOverrides(const RunOverrides& o, sim::Scenario* scenario) {
  if (o.plan_hz) scenario->rates.plan_hz = *o.plan_hz;
  if (o.sense_hz) scenario->rates.sense_hz = *o.sense_hz;
  if (o.control_hz) scenario->rates.control_hz = *o.control_hz;
  if (o.seed) scenario->sensor_seed = *o.seed;
  if (o.attraction_rate) scenario->attraction_rate = *o.attraction_rate;
  if (o.step_size) scenario->step_size = *o.step_size;
  if (o.epsilon) scenario->epsilon = *o.epsilon;
  if (o.duration) scenario->duration = *o.duration;
  return sim::ValidateScenario(*scenario);
}

int RunCommand(const RunOptions& options, std::ostream& out,
               std::ostream& err) {
  absl::StatusOr<NamedScenario> loaded = LoadScenario(options.scenario);
  if (!loaded.ok()) {
    err << "error: " << loaded.status().message() << "\n";
    return kExitConfigError;
  }
  if (options.filter_n == 0) {
    err << "error: --filter-n must be at least 1\n";
    return kExitConfigError;
  }
  sim::Scenario& scenario = loaded->scenario;
  if (absl::Status s = ApplyOverrides(options.overrides, &scenario); !s.ok()) {
    err << "error: " << s.message() << "\n";
    return kExitConfigError;
  }

  // The point map is gathered alongside the run rather than by a second
  // simulation.
  std::vector<MapPoint> points;
  absl::StatusOr<std::unique_ptr<sim::Simulation>> simulation =
      sim::Simulation::Create(scenario);
  if (!simulation.ok()) {
    err << "error: " << simulation.status().message() << "\n";
    return kExitConfigError;
  }
  StatsCollector collector;
  const sim::World* world = &(*simulation)->world();
  (*simulation)->set_observer([&](const sim::TickEvent& event) {
    collector.Observe(*world, event);
    if (event.cloud != nullptr) AppendSweep(*event.cloud, &points);
  });
  const auto start = absl::Now();
  if (absl::Status s = (*simulation)->Run(); !s.ok()) {
    err << "error: simulation failed: " << s.message() << "\n";
    return kExitUnexpectedOutcome;
  }
  collector.Finish(**simulation);
  RunResult result{(*simulation)->trace(), collector.stats(),
                   absl::ToDoubleSeconds(absl::Now() - start)};

  const fs::path dir = OutputDir(options, loaded->name);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create " << dir.string() << ": " << ec.message()
        << "\n";
    return kExitConfigError;
  }
  const nlohmann::json report =
      ReportJson(loaded->name, scenario, result,
                 absl::FormatTime(absl::RFC3339_sec, absl::Now(),
                                  absl::UTCTimeZone()));
  for (const auto& [file, content] :
       std::vector<std::pair<std::string, std::string>>{
           {"trace.txt", sim::FormatTrace(result.trace)},
           {"report.json", report.dump(2) + "\n"},
           {"point_map.xyz",
            FormatPointMap(FilterEveryNth(points, options.filter_n))}}) {
    if (absl::Status s = WriteFile(dir / file, content); !s.ok()) {
      err << "error: " << s.message() << "\n";
      return kExitConfigError;
    }
  }

  const sim::Outcome outcome =
      result.trace.outcome.value_or(sim::Outcome::kTimeout);
  out << absl::StrFormat(
      "%s: %s after %.2f s simulated (%.2f s wall), coverage %.3f, "
      "distance %.2f m -> %s\n",
      loaded->name, std::string(sim::OutcomeName(outcome)),
      result.stats.sim_time, result.wall_seconds, result.stats.coverage,
      result.stats.distance, dir.string());
  if (outcome == sim::Outcome::kCollision) return kExitCollision;
  if (outcome != ExpectedOutcome(scenario)) {
    err << "expected " << sim::OutcomeName(ExpectedOutcome(scenario))
        << ", got " << sim::OutcomeName(outcome) << "\n";
    return kExitUnexpectedOutcome;
  }
  return kExitOk;
}

int ExportCommand(const ExportOptions& options, std::ostream& out,
                  std::ostream& err) {
  absl::StatusOr<sim::Trace> trace = LoadTrace(options.trace_path);
  if (!trace.ok()) {
    err << "error: " << trace.status().message() << "\n";
    return kExitConfigError;
  }
  absl::StatusOr<std::string> content;
  switch (options.kind) {
    case ExportKind::kTrajectoryTable:
      content = TrajectoryTable(*trace);
      break;
    case ExportKind::kPointMap: {
      if (options.filter_n == 0) {
        err << "error: --filter-n must be at least 1\n";
        return kExitConfigError;
      }
      absl::StatusOr<std::vector<MapPoint>> points = PointMapFromTrace(*trace);
      if (!points.ok()) {
        content = points.status();
      } else {
        content = FormatPointMap(FilterEveryNth(*points, options.filter_n));
      }
      break;
    }
    case ExportKind::kFieldSvg:
      content = FieldSvg(*trace, options.tick);
      break;
  }
  if (!content.ok()) {
    err << "error: " << content.status().message() << "\n";
    return content.status().code() == absl::StatusCode::kDataLoss
               ? kExitReplayMismatch
               : kExitConfigError;
  }
  if (options.out_path.empty()) {
    out << *content;
    return kExitOk;
  }
  if (absl::Status s = WriteFile(options.out_path, *content); !s.ok()) {
    err << "error: " << s.message() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}

int ReplayCommand(const std::string& trace_path, std::ostream& out,
                  std::ostream& err) {
  absl::StatusOr<sim::Trace> trace = LoadTrace(trace_path);
  if (!trace.ok()) {
    err << "error: " << trace.status().message() << "\n";
    return kExitConfigError;
  }
  absl::StatusOr<sim::TraceComparison> cmp = Replay(*trace);
  if (!cmp.ok()) {
    err << "error: " << cmp.status().message() << "\n";
    return cmp.status().code() == absl::StatusCode::kDataLoss
               ? kExitReplayMismatch
               : kExitConfigError;
  }
  if (!cmp->match) {
    if (cmp->first_divergent_tick.has_value()) {
      err << "replay diverges at tick " << *cmp->first_divergent_tick << ": "
          << cmp->detail << "\n";
    } else {
      err << "replay differs: " << cmp->detail << "\n";
    }
    return kExitReplayMismatch;
  }
  out << "replay matches: " << trace->records.size() << " ticks, outcome "
      << (trace->outcome ? sim::OutcomeName(*trace->outcome) : "none")
      << "\n";
  return kExitOk;
}

int ListScenariosCommand(std::ostream& out) {
  for (const std::string& name : sim::BuiltinScenarioNames()) {
    absl::StatusOr<sim::Scenario> s =
        sim::ParseScenario(*sim::BuiltinScenarioText(name));
    out << name;
    if (s.ok()) {
      out << "  (expect "
          << sim::OutcomeName(s->expect.value_or(sim::Outcome::kComplete))
          << ", " << s->duration << " s)";
    }
    out << "\n";
  }
  return kExitOk;
}

}  // namespace explore::cli
