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


#include "explore/cli/report.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <memory>
#include <string>

#include "absl/strings/str_format.h"
#include "explore/planning/planner.h"
#include "explore/sim/world.h"

namespace explore::cli {

void StatsCollector::Attach(sim::Simulation* simulation) {
  const sim::World* world = &simulation->world();
  simulation->set_observer([this, world](const sim::TickEvent& event) {
    Observe(*world, event);
  });
}

void StatsCollector::Observe(const sim::World& world,
                             const sim::TickEvent& event) {
  const double clearance =
      sim::Clearance(world, event.state.pose.position);
  stats_.min_clearance =
      seen_ ? std::min(stats_.min_clearance, clearance) : clearance;
  seen_ = true;
  if (event.record.collision) ++stats_.collision_ticks;
  ++stats_.decisions[event.record.decision];
  if (event.plan != nullptr &&
      event.plan->decision == planning::Decision::kNewPath &&
      event.plan->path.has_value()) {
    if (event.plan->path->direction() ==
        geometry::OrbitDirection::kClockwise) {
      ++stats_.clockwise_paths;
    } else {
      ++stats_.counterclockwise_paths;
    }
  }
}

void StatsCollector::Finish(const sim::Simulation& simulation) {
  stats_.ticks = simulation.tick();
  stats_.sim_time = simulation.time();
  stats_.distance = simulation.distance_traveled();
  stats_.coverage = simulation.coverage().covered_fraction;
  stats_.final_pose = simulation.state().pose;
}

absl::StatusOr<RunResult> RunWithStats(const sim::Scenario& scenario) {
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<std::unique_ptr<sim::Simulation>> simulation =
      sim::Simulation::Create(scenario);
  if (!simulation.ok()) return simulation.status();
  StatsCollector collector;
  collector.Attach(simulation->get());
  if (absl::Status s = (*simulation)->Run(); !s.ok()) return s;
  collector.Finish(**simulation);
  RunResult result;
  result.trace = (*simulation)->trace();
  result.stats = collector.stats();
  result.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return result;
}

sim::Outcome ExpectedOutcome(const sim::Scenario& scenario) {
  return scenario.expect.value_or(sim::Outcome::kComplete);
}

nlohmann::json ReportJson(const std::string& name,
                          const sim::Scenario& scenario,
                          const RunResult& result,
                          const std::string& generated_at) {
  const RunStats& s = result.stats;
  const sim::Outcome outcome =
      result.trace.outcome.value_or(sim::Outcome::kTimeout);
  nlohmann::json decisions = nlohmann::json::object();
  for (const auto& [label, count] : s.decisions) decisions[label] = count;
  nlohmann::json report = {
      {"scenario", name},
      {"world", result.trace.world},
      {"seed", result.trace.seed},
      {"config_hash", absl::StrFormat("%016x", result.trace.config_hash)},
      {"outcome", std::string(sim::OutcomeName(outcome))},
      {"expected", std::string(sim::OutcomeName(ExpectedOutcome(scenario)))},
      {"success", outcome == ExpectedOutcome(scenario)},
      {"ticks", s.ticks},
      {"sim_time", s.sim_time},
      {"distance", s.distance},
      {"coverage", s.coverage},
      {"min_clearance", s.min_clearance},
      {"collision_ticks", s.collision_ticks},
      {"paths", {{"clockwise", s.clockwise_paths},
                 {"counterclockwise", s.counterclockwise_paths}}},
      {"decisions", decisions},
      {"final_pose", {{"x", s.final_pose.position.x},
                      {"y", s.final_pose.position.y},
                      {"heading", s.final_pose.heading}}},
      {"rates", {{"sense_hz", scenario.rates.sense_hz},
                 {"plan_hz", scenario.rates.plan_hz},
                 {"control_hz", scenario.rates.control_hz}}},
      {"metadata", {{"generated_at", generated_at},
                    {"wall_seconds", result.wall_seconds}}},
  };
  return report;
}

}  // namespace explore::cli
