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

#include "explore/planning/visibility.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace explore::planning {
namespace {

using geometry::Point2;
using geometry::Vec2;

// Distance along the unit ray from the origin to segment [a, b], or +inf.
double RayHit(Vec2 dir, Point2 a, Point2 b) {
  const Vec2 oa{a.x, a.y};
  const Vec2 ab = b - a;
  const double denom = geometry::Cross(dir, ab);
  if (denom == 0.0) return std::numeric_limits<double>::infinity();
  const double t = geometry::Cross(oa, ab) / denom;
  const double u = geometry::Cross(oa, dir) / denom;
  // Rays through a vertex must not slip between the two segments sharing it.
  constexpr double kSlack = 1e-9;
  if (t < 0.0 || u < -kSlack || u > 1.0 + kSlack) {
    return std::numeric_limits<double>::infinity();
  }
  return t;
}

}  // namespace

std::vector<Point2> VisibleRing(const LocalVertexSet& local,
                                const geometry::RobotPose& pose,
                                const FovConfig& fov, int arc_chords) {
  const double half = fov.half_angle;
  arc_chords = std::max(1, arc_chords);

  // Occluding segments in the sensor frame.
  std::vector<std::pair<Point2, Point2>> segments;
  std::vector<double> bearings;
  for (int i = 0; i <= arc_chords; ++i) {
    bearings.push_back(-half + 2.0 * half * i / arc_chords);
  }
  constexpr double kSplit = 1e-6;
  // Clusters joined in sweep order: the chord between consecutive clusters
  // is a frontier, and what lies beyond it has not been seen.
  std::vector<Point2> body;
  for (const ObstacleCluster& cluster : local.obstacles) {
    for (Point2 v : cluster.vertices) {
      body.push_back(geometry::WorldToBody(pose, v));
    }
  }
  for (size_t i = 0; i + 1 < body.size(); ++i) {
    segments.emplace_back(body[i], body[i + 1]);
  }
  if (body.size() >= 2) {
    for (Point2 v : body) {
      const double b = std::atan2(v.y, v.x);
      for (double split : {b - kSplit, b + kSplit}) {
        if (split > -half && split < half) bearings.push_back(split);
      }
    }
  }
  std::sort(bearings.begin(), bearings.end());
  bearings.erase(std::unique(bearings.begin(), bearings.end()),
                 bearings.end());

  std::vector<Point2> ring;
  ring.reserve(bearings.size() + 1);
  ring.push_back(pose.position);
  for (double bearing : bearings) {
    const Vec2 dir = geometry::UnitVector(bearing);
    double range = fov.max_range;
    for (const auto& [a, b] : segments) range = std::min(range, RayHit(dir, a, b));
    ring.push_back(geometry::BodyToWorld(pose, {range * dir.dx, range * dir.dy}));
  }
  return ring;
}

Region2 VerticesToRegion(const LocalVertexSet& local,
                         const geometry::RobotPose& pose, const FovConfig& fov,
                         int arc_chords) {
  return Region2::FromStar(pose.position,
                           VisibleRing(local, pose, fov, arc_chords));
}

}  // namespace explore::planning
