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

#ifndef EXPLORE_PLANNING_PLANNER_H_
#define EXPLORE_PLANNING_PLANNER_H_

#include <optional>
#include <string_view>

#include "absl/status/statusor.h"
#include "explore/geometry/path_function.h"
#include "explore/geometry/robot_state.h"
#include "explore/geometry/vec2.h"
#include "explore/planning/candidates.h"
#include "explore/planning/coverage.h"
#include "explore/planning/frontier.h"
#include "explore/planning/local_vertices.h"
#include "explore/planning/point_cloud.h"
#include "explore/planning/region.h"

namespace explore::planning {

struct PlannerConfig {
  double epsilon = 0.3;  // clustering gap, scene-change and frontier radius
  FovConfig fov;
  int fan_size = 9;
  double step_size = 0.1;     // theta of the tracker update
  double tracker_cap = 10.0;  // magnitude clamp of the tracker vector
  double coverage_threshold = 0.95;
  int arc_chords = 16;
  double inflation_radius = 0.5;
  double vertex_tolerance = 0.1;
  double sample_step = 0.05;
  double fixed_attraction_rate = 0.0;  // > 0 overrides the curvature rule
  // Free space to measure coverage against; empty disables the coverage test.
  Region2 free_space;
  // Optional terminator for open circuits: exploration is complete once the
  // robot is within `goal_radius` of `goal`.
  std::optional<geometry::Point2> goal;
  double goal_radius = 1.0;
};

enum class Decision { kContinueTracking, kNewPath, kStuck, kComplete };

std::string_view DecisionName(Decision decision);

struct PlannerOutput {
  Decision decision = Decision::kContinueTracking;
  geometry::Vec2 tracker;
  // Path being followed after this step (the new one on kNewPath).
  std::optional<geometry::PathFunction> path;
  std::optional<Frontier> chosen_frontier;
  // Diagnostics of this step; the candidate set is present only when the
  // scene changed.
  std::optional<LocalVertexSet> scene;
  std::optional<CandidateSet> candidates;
  int selected_index = -1;
};

struct PlanResult {
  PlannerOutput output;
  CoverageStack stack;
};

// One pass of the exploration loop. In order: completion test (coverage
// fraction or goal), vertex extraction from `cloud` at its pose, scene-change
// test against the scene of the last decision, and on change candidate
// generation plus selection (or stuck). The tracker restarts from the new
// path's guidance when a path is adopted, accumulates otherwise, and is zero
// while stuck or complete.
absl::StatusOr<PlanResult> PlanStep(const geometry::RobotState& state,
                                    const PointCloud& cloud,
                                    CoverageStack stack,
                                    const PlannerConfig& config);

// Tracker update between planning passes: accumulates the current path's
// guidance at `position` with the configured step and cap. Returns zero when
// there is no path or the planner is stuck.
geometry::Vec2 AdvanceTracker(geometry::Vec2 prev, const CoverageStack& stack,
                              geometry::Point2 position,
                              const PlannerConfig& config);

}  // namespace explore::planning

#endif  // EXPLORE_PLANNING_PLANNER_H_
