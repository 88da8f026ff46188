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

#ifndef EXPLORE_PLANNING_POINT_CLOUD_H_
#define EXPLORE_PLANNING_POINT_CLOUD_H_

#include <numbers>
#include <vector>

#include "explore/geometry/vec2.h"

namespace explore::planning {

// One return of the planar depth sweep, in the sensor frame.
struct SensorReturn {
  geometry::Point2 point;  // sensor frame, x forward
  double range = 0.0;
  double bearing = 0.0;
  bool free = false;  // ray reached max range without hitting anything
};

// A planar slice of the depth camera's point cloud, ordered by bearing.
struct PointCloud {
  std::vector<SensorReturn> returns;
  double stamp = 0.0;
  // Estimated sensor pose at `stamp`; maps the sensor frame to the world.
  geometry::RobotPose pose;
};

// Field of view of the sensor as the planner sees it.
struct FovConfig {
  double half_angle = 43.5 * std::numbers::pi / 180.0;
  double max_range = 6.0;
};

}  // namespace explore::planning

#endif  // EXPLORE_PLANNING_POINT_CLOUD_H_
