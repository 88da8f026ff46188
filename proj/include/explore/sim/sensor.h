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

#ifndef EXPLORE_SIM_SENSOR_H_
#define EXPLORE_SIM_SENSOR_H_

#include <cstdint>
#include <numbers>
#include <vector>

#include "absl/status/statusor.h"
#include "explore/common/random.h"
#include "explore/geometry/vec2.h"
#include "explore/planning/point_cloud.h"
#include "explore/sim/world.h"

namespace explore::sim {

struct SensorConfig {
  double half_angle = 43.5 * std::numbers::pi / 180.0;
  double max_range = 6.0;
  int rays = 96;
  double range_noise_sigma = 0.0;
  uint64_t seed = 1;
};

// Distance along a ray from `origin` at world angle `angle` to the nearest
// edge, or +inf if nothing is hit.
double CastRay(const std::vector<Segment>& edges, geometry::Point2 origin,
               double angle);

// Planar depth sweep with seeded range noise. Rays are evenly spaced over
// [-half_angle, +half_angle]. Rays that reach max range without a hit come
// back as free returns at max range; hits get Gaussian noise, clamped to
// [0, max_range]. The returned cloud's `pose` is the caller's estimate.
class RangeSensor {
 public:
  explicit RangeSensor(const SensorConfig& config);

  // Rejects a true pose outside the world boundary or an invalid config.
  absl::StatusOr<planning::PointCloud> Sense(
      const World& world, const geometry::RobotPose& true_pose,
      const geometry::RobotPose& estimated_pose, double stamp);

  const SensorConfig& config() const { return config_; }

 private:
  SensorConfig config_;
  DeterministicRng rng_;
};

}  // namespace explore::sim

#endif  // EXPLORE_SIM_SENSOR_H_
