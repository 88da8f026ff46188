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

#ifndef EXPLORE_PLANNING_VISIBILITY_H_
#define EXPLORE_PLANNING_VISIBILITY_H_

#include <vector>

#include "explore/geometry/vec2.h"
#include "explore/planning/local_vertices.h"
#include "explore/planning/point_cloud.h"
#include "explore/planning/region.h"

namespace explore::planning {

// Boundary of the region seen from `pose`: the field-of-view sector, with the
// arc approximated by `arc_chords` chords, cut back by the obstacle clusters.
// The clusters are joined in sweep order into one occluding polyline, so the
// frontier chords between consecutive clusters bound the region too; only
// the gaps next to the FOV edges reach out to the arc. The ring starts at
// the sensor origin.
std::vector<geometry::Point2> VisibleRing(const LocalVertexSet& local,
                                          const geometry::RobotPose& pose,
                                          const FovConfig& fov,
                                          int arc_chords = 16);

// The ring above as a region.
Region2 VerticesToRegion(const LocalVertexSet& local,
                         const geometry::RobotPose& pose, const FovConfig& fov,
                         int arc_chords = 16);

}  // namespace explore::planning

#endif  // EXPLORE_PLANNING_VISIBILITY_H_
