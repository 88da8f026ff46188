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

#ifndef EXPLORE_GEOMETRY_ROBOT_STATE_H_
#define EXPLORE_GEOMETRY_ROBOT_STATE_H_

#include "explore/geometry/vec2.h"

namespace explore::geometry {

// Kinematic state of the robot plus the tracker vector the controller steers
// along.
struct RobotState {
  RobotPose pose;
  double linear_velocity = 0.0;   // m/s
  double angular_velocity = 0.0;  // rad/s
  Vec2 tracker;

  friend bool operator==(const RobotState&, const RobotState&) = default;
};

}  // namespace explore::geometry

#endif  // EXPLORE_GEOMETRY_ROBOT_STATE_H_
