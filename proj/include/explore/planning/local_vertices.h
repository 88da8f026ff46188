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

#ifndef EXPLORE_PLANNING_LOCAL_VERTICES_H_
#define EXPLORE_PLANNING_LOCAL_VERTICES_H_

#include <vector>

#include "absl/status/statusor.h"
#include "explore/geometry/vec2.h"
#include "explore/planning/point_cloud.h"

namespace explore::planning {

// One obstacle seen in a sweep: a maximal chain of consecutive returns whose
// successive gaps are within epsilon, reduced to a few vertices.
struct ObstacleCluster {
  // World-frame vertices in sweep order. Always contains the first and last
  // point of the chain and the point of minimum range; breakpoints of a
  // polyline simplification are kept as well so that concave chains (walls
  // meeting at a corner) keep their shape.
  std::vector<geometry::Point2> vertices;
  // Indices into PointCloud::returns of every member of the chain.
  std::vector<int> members;
};

// Per-step sensing result: field-of-view limits plus clustered obstacles.
struct LocalVertexSet {
  // World-frame FOV limits ordered by bearing: the right boundary ray's end,
  // the arc's extreme points, the left boundary ray's end. Closing the list
  // through `origin` gives a simple polygon.
  std::vector<geometry::Point2> fov_vertices;
  std::vector<ObstacleCluster> obstacles;  // sweep order, right to left
  geometry::RobotPose origin;
  double stamp = 0.0;
};

// Groups the non-free returns into chains of consecutive returns whose
// successive Euclidean gaps are at most `epsilon`. A free return breaks a
// chain. Returned index lists are in sweep order.
std::vector<std::vector<int>> ClusterChains(const PointCloud& cloud,
                                            double epsilon);

// Builds the local vertex set of a sweep. Rejects epsilon <= 0. An empty
// cloud yields no obstacles. `vertex_tolerance` is the polyline simplification
// tolerance for cluster vertices; a non-positive value keeps only the first,
// nearest and last points.
absl::StatusOr<LocalVertexSet> ExtractVertices(const PointCloud& cloud,
                                               double epsilon,
                                               const FovConfig& fov,
                                               const geometry::RobotPose& pose,
                                               double vertex_tolerance = 0.1);

// Scene-change test between two vertex sets: true when the cluster count or
// any cluster's vertex count differs, or when any matched obstacle vertex moved
// farther than `epsilon`. FOV limit vertices ride along with the robot and are
// deliberately ignored; otherwise every planning tick would be a new scene.
bool SceneChanged(const LocalVertexSet& before, const LocalVertexSet& after,
                  double epsilon);

}  // namespace explore::planning

#endif  // EXPLORE_PLANNING_LOCAL_VERTICES_H_
