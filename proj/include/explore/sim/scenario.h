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

#ifndef EXPLORE_SIM_SCENARIO_H_
#define EXPLORE_SIM_SCENARIO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "explore/geometry/vec2.h"
#include "explore/planning/planner.h"
#include "explore/sim/robot.h"
#include "explore/sim/sensor.h"
#include "explore/sim/world.h"

namespace explore::sim {

enum class Outcome { kComplete, kStuck, kCollision, kTimeout };

std::string_view OutcomeName(Outcome outcome);
std::optional<Outcome> ParseOutcome(std::string_view name);

struct Rates {
  double sense_hz = 10.0;
  double plan_hz = 10.0;
  double control_hz = 20.0;
};

// Everything needed to reproduce a run. Angles are kept in degrees, as
// written in scenario files, so that text round trips are exact.
struct Scenario {
  World world;

  double sensor_half_angle_deg = 43.5;
  double sensor_max_range = 6.0;
  int sensor_rays = 96;
  double sensor_noise_sigma = 0.0;
  uint64_t sensor_seed = 1;

  double epsilon = 0.3;
  int fan_size = 9;
  double step_size = 0.1;
  double tracker_cap = 10.0;
  double coverage_threshold = 0.95;
  int arc_chords = 16;
  double inflation_radius = 0.5;
  double vertex_tolerance = 0.1;
  double sample_step = 0.05;
  double attraction_rate = 0.0;  // 0 = chosen by curvature
  std::optional<geometry::Point2> goal;
  double goal_radius = 1.0;

  geometry::Point2 start;
  double start_heading_deg = 0.0;
  RobotLimits limits;
  double robot_radius = 0.5;
  PoseProviderConfig pose_provider;

  Rates rates;
  double duration = 600.0;
  std::optional<Outcome> expect;
};

// Parses the sectioned key = value format documented in docs/scenario_format.md.
// Errors name the offending line.
absl::StatusOr<Scenario> ParseScenario(std::string_view text);

// Canonical text of a scenario; ParseScenario(SerializeScenario(s)) == s.
std::string SerializeScenario(const Scenario& scenario);

// Checks ranges and the world geometry.
absl::Status ValidateScenario(const Scenario& scenario);

SensorConfig MakeSensorConfig(const Scenario& scenario);
// Planner configuration including the world's free space.
planning::PlannerConfig MakePlannerConfig(const Scenario& scenario);
geometry::RobotPose StartPose(const Scenario& scenario);

// Names of the built-in scenarios and their source text.
std::vector<std::string> BuiltinScenarioNames();
std::optional<std::string_view> BuiltinScenarioText(std::string_view name);

}  // namespace explore::sim

#endif  // EXPLORE_SIM_SCENARIO_H_
