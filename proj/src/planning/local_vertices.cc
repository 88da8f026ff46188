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

#include "explore/planning/local_vertices.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "absl/status/status.h"

namespace explore::planning {
namespace {

using geometry::Point2;

// Douglas-Peucker over chain[first..last], marking kept indices.
void Simplify(const std::vector<Point2>& chain, size_t first, size_t last,
              double tolerance, std::vector<bool>& keep) {
  if (last <= first + 1) return;
  double worst = -1.0;
  size_t worst_index = first;
  for (size_t i = first + 1; i < last; ++i) {
    const double d =
        geometry::PointSegmentDistance(chain[i], chain[first], chain[last]);
    if (d > worst) {
      worst = d;
      worst_index = i;
    }
  }
  if (worst <= tolerance) return;
  keep[worst_index] = true;
  Simplify(chain, first, worst_index, tolerance, keep);
  Simplify(chain, worst_index, last, tolerance, keep);
}

}  // namespace

std::vector<std::vector<int>> ClusterChains(const PointCloud& cloud,
                                            double epsilon) {
  std::vector<std::vector<int>> chains;
  const auto& returns = cloud.returns;
  bool open = false;
  for (size_t i = 0; i < returns.size(); ++i) {
    if (returns[i].free) {
      open = false;
      continue;
    }
    const bool joins = open && geometry::Distance(returns[i - 1].point,
                                                  returns[i].point) <= epsilon;
    if (!joins) chains.emplace_back();
    chains.back().push_back(static_cast<int>(i));
    open = true;
  }
  return chains;
}

absl::StatusOr<LocalVertexSet> ExtractVertices(const PointCloud& cloud,
                                               double epsilon,
                                               const FovConfig& fov,
                                               const geometry::RobotPose& pose,
                                               double vertex_tolerance) {
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError("epsilon must be positive");
  }
  if (!(fov.half_angle > 0.0) || !(fov.max_range > 0.0)) {
    return absl::InvalidArgumentError("field of view must be non-degenerate");
  }

  LocalVertexSet result;
  result.origin = pose;
  result.stamp = cloud.stamp;

  // FOV limits: boundary rays at max range, plus the arc's axis extremes.
  const double h = fov.half_angle;
  std::vector<double> bearings = {-h};
  for (double axis : {-std::numbers::pi / 2.0, 0.0, std::numbers::pi / 2.0}) {
    if (axis > -h && axis < h) bearings.push_back(axis);
  }
  bearings.push_back(h);
  for (double bearing : bearings) {
    result.fov_vertices.push_back(geometry::BodyToWorld(
        pose, {fov.max_range * std::cos(bearing),
               fov.max_range * std::sin(bearing)}));
  }

  for (std::vector<int>& members : ClusterChains(cloud, epsilon)) {
    std::vector<Point2> chain;
    chain.reserve(members.size());
    size_t nearest = 0;
    for (size_t i = 0; i < members.size(); ++i) {
      const SensorReturn& r = cloud.returns[members[i]];
      chain.push_back(r.point);
      if (r.range < cloud.returns[members[nearest]].range) nearest = i;
    }
    std::vector<bool> keep(chain.size(), false);
    keep.front() = true;
    keep.back() = true;
    keep[nearest] = true;
    if (vertex_tolerance > 0.0) {
      Simplify(chain, 0, chain.size() - 1, vertex_tolerance, keep);
    }
    ObstacleCluster cluster;
    for (size_t i = 0; i < chain.size(); ++i) {
      if (keep[i]) cluster.vertices.push_back(geometry::BodyToWorld(pose, chain[i]));
    }
    cluster.members = std::move(members);
    result.obstacles.push_back(std::move(cluster));
  }
  return result;
}

bool SceneChanged(const LocalVertexSet& before, const LocalVertexSet& after,
                  double epsilon) {
  auto moved = [epsilon](const std::vector<Point2>& a,
                         const std::vector<Point2>& b) {
    if (a.size() != b.size()) return true;
    for (size_t i = 0; i < a.size(); ++i) {
      if (geometry::Distance(a[i], b[i]) > epsilon) return true;
    }
    return false;
  };
  if (before.obstacles.size() != after.obstacles.size()) return true;
  for (size_t i = 0; i < before.obstacles.size(); ++i) {
    if (moved(before.obstacles[i].vertices, after.obstacles[i].vertices)) {
      return true;
    }
  }
  return false;
}

}  // namespace explore::planning
