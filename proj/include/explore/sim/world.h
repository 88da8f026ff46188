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

#ifndef EXPLORE_SIM_WORLD_H_
#define EXPLORE_SIM_WORLD_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "explore/geometry/vec2.h"
#include "explore/planning/region.h"

namespace explore::sim {

using Polygon = std::vector<geometry::Point2>;

// The environment: a boundary polygon enclosing the explorable space and
// obstacle polygons inside it. Rings are open and of either orientation.
struct World {
  std::string name;
  Polygon boundary;
  std::vector<Polygon> obstacles;
};

struct Segment {
  geometry::Point2 a;
  geometry::Point2 b;
};

// Checks that the boundary is a simple polygon with positive area, and that
// obstacles are simple, inside the boundary and pairwise disjoint.
absl::Status ValidateWorld(const World& world);

// Every edge of the boundary and of each obstacle.
std::vector<Segment> WorldEdges(const World& world);

// Crossing-number point-in-polygon; points on the boundary may go either way.
bool PointInPolygon(const Polygon& polygon, geometry::Point2 p);

// Boundary interior minus the obstacles.
planning::Region2 FreeSpace(const World& world);

// Distance from `p` to the nearest edge of the boundary or any obstacle.
double Clearance(const World& world, geometry::Point2 p);

// True iff a disc of `radius` at the pose overlaps an obstacle or leaves the
// boundary.
bool CollisionCheck(const World& world, const geometry::RobotPose& pose,
                    double radius);

}  // namespace explore::sim

#endif  // EXPLORE_SIM_WORLD_H_
