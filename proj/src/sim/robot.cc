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

#include "explore/sim/robot.h"

#include <algorithm>
#include <cmath>

namespace explore::sim {

using geometry::RobotState;

RobotState StepRobot(const RobotState& state, VelocityCommand command,
                     double dt, const RobotLimits& limits) {
  const double v = std::clamp(command.v, -limits.v_max, limits.v_max);
  const double omega =
      std::clamp(command.omega, -limits.omega_max, limits.omega_max);
  RobotState next = state;
  next.linear_velocity = v;
  next.angular_velocity = omega;
  if (v == 0.0 && omega == 0.0) return next;
  const double mid = state.pose.heading + 0.5 * omega * dt;
  next.pose.position.x += v * std::cos(mid) * dt;
  next.pose.position.y += v * std::sin(mid) * dt;
  next.pose.heading = geometry::WrapAngle(state.pose.heading + omega * dt);
  return next;
}

VelocityCommand SteerFromTracker(const RobotState& state,
                                 const RobotLimits& limits) {
  const geometry::Vec2 t = state.tracker;
  if (t.dx == 0.0 && t.dy == 0.0) return {};
  const double error =
      geometry::WrapAngle(std::atan2(t.dy, t.dx) - state.pose.heading);
  return {.v = limits.v_max * std::max(0.0, std::cos(error)),
          .omega = std::clamp(limits.k_heading * error, -limits.omega_max,
                              limits.omega_max)};
}

PoseProvider::PoseProvider(const PoseProviderConfig& config)
    : config_(config), rng_(config.seed) {}

geometry::RobotPose PoseProvider::Estimate(
    const geometry::RobotPose& true_pose) {
  if (config_.kind == PoseProviderConfig::Kind::kGroundTruth) return true_pose;
  if (config_.sigma_xy > 0.0) {
    drift_.dx += rng_.Gaussian(0.0, config_.sigma_xy);
    drift_.dy += rng_.Gaussian(0.0, config_.sigma_xy);
  }
  if (config_.sigma_heading > 0.0) {
    heading_drift_ += rng_.Gaussian(0.0, config_.sigma_heading);
  }
  if (drift_.dx == 0.0 && drift_.dy == 0.0 && heading_drift_ == 0.0) {
    return true_pose;
  }
  return {true_pose.position + drift_,
          geometry::WrapAngle(true_pose.heading + heading_drift_)};
}

}  // namespace explore::sim
