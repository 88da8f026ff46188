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

#include "explore/planning/planner.h"

#include <utility>

#include "absl/status/status.h"
#include "explore/geometry/guidance_field.h"
#include "explore/planning/visibility.h"

namespace explore::planning {

using geometry::Vec2;

std::string_view DecisionName(Decision decision) {
  switch (decision) {
    case Decision::kContinueTracking:
      return "continue";
    case Decision::kNewPath:
      return "new_path";
    case Decision::kStuck:
      return "stuck";
    case Decision::kComplete:
      return "complete";
  }
  return "unknown";
}

Vec2 AdvanceTracker(Vec2 prev, const CoverageStack& stack,
                    geometry::Point2 position, const PlannerConfig& config) {
  if (stack.stuck || stack.entries.empty()) return {};
  const Vec2 next = geometry::TrackStep(prev, stack.entries.back().path,
                                        position, config.step_size);
  return geometry::ClampNorm(next, config.tracker_cap);
}

absl::StatusOr<PlanResult> PlanStep(const geometry::RobotState& state,
                                    const PointCloud& cloud,
                                    CoverageStack stack,
                                    const PlannerConfig& config) {
  PlannerOutput out;
  if (!stack.entries.empty()) out.path = stack.entries.back().path;

  const bool goal_reached =
      config.goal.has_value() &&
      geometry::Distance(state.pose.position, *config.goal) <=
          config.goal_radius;
  const bool covered = config.free_space.Area() > 0.0 &&
                       stack.covered_fraction >= config.coverage_threshold;
  if (goal_reached || covered) {
    out.decision = Decision::kComplete;
    return PlanResult{std::move(out), std::move(stack)};
  }

  absl::StatusOr<LocalVertexSet> scene =
      ExtractVertices(cloud, config.epsilon, config.fov, cloud.pose,
                      config.vertex_tolerance);
  if (!scene.ok()) return scene.status();
  out.scene = *scene;

  const bool changed = !stack.reference_scene.has_value() ||
                       SceneChanged(*stack.reference_scene, *scene,
                                    config.epsilon);
  if (!changed) {
    out.decision =
        stack.stuck ? Decision::kStuck : Decision::kContinueTracking;
    out.tracker =
        AdvanceTracker(state.tracker, stack, state.pose.position, config);
    return PlanResult{std::move(out), std::move(stack)};
  }

  stack.reference_scene = *scene;
  const CandidateConfig candidate_config{
      .fov = config.fov,
      .inflation_radius = config.inflation_radius,
      .sample_step = config.sample_step,
      .fixed_attraction_rate = config.fixed_attraction_rate};
  absl::StatusOr<CandidateSet> candidates = GenerateCandidates(
      *scene, cloud.pose, config.fan_size, candidate_config);
  if (!candidates.ok()) return candidates.status();
  const Selection selection =
      ScoreAndSelect(*candidates, ExtractFrontiers(*scene), config.epsilon);
  out.selected_index = selection.index;
  out.candidates = *std::move(candidates);

  if (selection.index < 0) {
    stack.stuck = true;
    out.decision = Decision::kStuck;
    return PlanResult{std::move(out), std::move(stack)};
  }

  const geometry::PathFunction& path =
      out.candidates->candidates[selection.index].path;
  const Region2 seen =
      VerticesToRegion(*scene, cloud.pose, config.fov, config.arc_chords);
  absl::StatusOr<CoverageStack> updated =
      UpdateCoverage(std::move(stack), path, cloud.stamp, seen);
  if (!updated.ok()) return updated.status();
  stack = *std::move(updated);
  stack.stuck = false;
  if (config.free_space.Area() > 0.0) {
    stack.covered_fraction = CoveredFraction(stack.explored, config.free_space);
  }

  out.decision = Decision::kNewPath;
  out.path = path;
  out.chosen_frontier = selection.frontier;
  out.tracker = geometry::ClampNorm(
      config.step_size * geometry::GuidanceField(path, state.pose.position),
      config.tracker_cap);
  return PlanResult{std::move(out), std::move(stack)};
}

}  // namespace explore::planning
