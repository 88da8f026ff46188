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


#ifndef EXPLORE_CLI_REPORT_H_
#define EXPLORE_CLI_REPORT_H_

#include <cstdint>
#include <map>
#include <string>

#include "absl/status/statusor.h"
#include "explore/geometry/vec2.h"
#include "explore/sim/scenario.h"
#include "explore/sim/simulation.h"
#include "explore/sim/trace.h"
#include "json.hpp"

namespace explore::cli {

// Aggregates gathered while a scenario runs.
struct RunStats {
  int64_t ticks = 0;
  double sim_time = 0.0;
  double distance = 0.0;
  double coverage = 0.0;
  double min_clearance = 0.0;  // true-pose distance to the nearest wall
  int collision_ticks = 0;
  int clockwise_paths = 0;
  int counterclockwise_paths = 0;
  std::map<std::string, int> decisions;  // per trace decision label
  geometry::RobotPose final_pose;
};

// Feeds on the simulation's tick events. Attach with Attach() before the
// first Step(); call Finish() once the run is over.
class StatsCollector {
 public:
  void Attach(sim::Simulation* simulation);
  void Observe(const sim::World& world, const sim::TickEvent& event);
  void Finish(const sim::Simulation& simulation);
  const RunStats& stats() const { return stats_; }

 private:
  RunStats stats_;
  bool seen_ = false;
};

struct RunResult {
  sim::Trace trace;
  RunStats stats;
  double wall_seconds = 0.0;
};

absl::StatusOr<RunResult> RunWithStats(const sim::Scenario& scenario);

// The outcome a run has to reach to count as a success: the scenario's
// `expect`, or complete when it has none.
sim::Outcome ExpectedOutcome(const sim::Scenario& scenario);

// report.json. Everything outside "metadata" is a pure function of the
// scenario, so two runs of the same configuration produce reports that agree
// once that block is dropped.
nlohmann::json ReportJson(const std::string& name,
                          const sim::Scenario& scenario,
                          const RunResult& result,
                          const std::string& generated_at);

}  // namespace explore::cli

#endif  // EXPLORE_CLI_REPORT_H_
