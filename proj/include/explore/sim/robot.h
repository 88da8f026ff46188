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

#ifndef EXPLORE_SIM_ROBOT_H_
#define EXPLORE_SIM_ROBOT_H_

#include <cstdint>

#include "explore/common/random.h"
#include "explore/geometry/robot_state.h"
#include "explore/geometry/vec2.h"

namespace explore::sim {

struct RobotLimits {
  double v_max = 0.5;      // m/s
  double omega_max = 1.0;  // rad/s
  double k_heading = 2.0;  // proportional heading gain, 1/s
};

struct VelocityCommand {
  double v = 0.0;
  double omega = 0.0;
};

// Unicycle integration over `dt` with the midpoint heading. The command is
// clamped to the limits first; the tracker is carried through.
geometry::RobotState StepRobot(const geometry::RobotState& state,
                               VelocityCommand command, double dt,
                               const RobotLimits& limits);

// Turns toward the tracker direction and slows down with the heading error;
// never reverses. A zero tracker stops the robot.
VelocityCommand SteerFromTracker(const geometry::RobotState& state,
                                 const RobotLimits& limits);

// Source of the pose the planner believes in.
struct PoseProviderConfig {
  enum class Kind { kGroundTruth, kNoisyOdometry };
  Kind kind = Kind::kGroundTruth;
  double sigma_xy = 0.0;       // m per tick
  double sigma_heading = 0.0;  // rad per tick
  uint64_t seed = 1;
};

// Ground truth passes the true pose through. Noisy odometry adds a drift
// that takes one seeded Gaussian random-walk step per call.
class PoseProvider {
 public:
  explicit PoseProvider(const PoseProviderConfig& config);

  geometry::RobotPose Estimate(const geometry::RobotPose& true_pose);

 private:
  PoseProviderConfig config_;
  DeterministicRng rng_;
  geometry::Vec2 drift_;
  double heading_drift_ = 0.0;
};

}  // namespace explore::sim

#endif  // EXPLORE_SIM_ROBOT_H_
