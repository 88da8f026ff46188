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

#include "explore/sim/sensor.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/status/status.h"

namespace explore::sim {

using geometry::Point2;
using geometry::Vec2;

double CastRay(const std::vector<Segment>& edges, Point2 origin, double angle) {
  const Vec2 dir = geometry::UnitVector(angle);
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& edge : edges) {
    const Vec2 ab = edge.b - edge.a;
    const double denom = geometry::Cross(dir, ab);
    if (denom == 0.0) continue;
    const Vec2 oa = edge.a - origin;
    const double t = geometry::Cross(oa, ab) / denom;
    const double u = geometry::Cross(oa, dir) / denom;
    if (t >= 0.0 && u >= 0.0 && u <= 1.0) best = std::min(best, t);
  }
  return best;
}

RangeSensor::RangeSensor(const SensorConfig& config)
    : config_(config), rng_(config.seed) {}

absl::StatusOr<planning::PointCloud> RangeSensor::Sense(
    const World& world, const geometry::RobotPose& true_pose,
    const geometry::RobotPose& estimated_pose, double stamp) {
  if (config_.rays < 2 || !(config_.max_range > 0.0) ||
      !(config_.range_noise_sigma >= 0.0) || !(config_.half_angle > 0.0)) {
    return absl::InvalidArgumentError("invalid sensor configuration");
  }
  if (!PointInPolygon(world.boundary, true_pose.position)) {
    return absl::OutOfRangeError("sensor pose is outside the world boundary");
  }
  const std::vector<Segment> edges = WorldEdges(world);
  planning::PointCloud cloud;
  cloud.stamp = stamp;
  cloud.pose = estimated_pose;
  cloud.returns.reserve(config_.rays);
  for (int i = 0; i < config_.rays; ++i) {
    const double bearing =
        -config_.half_angle + 2.0 * config_.half_angle * i / (config_.rays - 1);
    const double hit =
        CastRay(edges, true_pose.position, true_pose.heading + bearing);
    planning::SensorReturn r;
    r.bearing = bearing;
    if (hit >= config_.max_range) {
      r.range = config_.max_range;
      r.free = true;
    } else {
      double range = hit;
      if (config_.range_noise_sigma > 0.0) {
        range += rng_.Gaussian(0.0, config_.range_noise_sigma);
      }
      r.range = std::clamp(range, 0.0, config_.max_range);
    }
    r.point = {r.range * std::cos(bearing), r.range * std::sin(bearing)};
    cloud.returns.push_back(r);
  }
  return cloud;
}

}  // namespace explore::sim
