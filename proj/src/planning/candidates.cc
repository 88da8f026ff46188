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

#include "explore/planning/candidates.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace explore::planning {

using geometry::OrbitDirection;
using geometry::PathFunction;
using geometry::Point2;
using geometry::SplineCoeffs;

double AttractionRateForCurvature(const SplineCoeffs& coeffs) {
  const double curvature = std::abs(2.0 * coeffs.b);
  if (curvature < 0.05) return 0.05;
  if (curvature > 0.5) return 0.4;
  return 0.1;
}

SplineCoeffs FanSpline(double bearing, double range) {
  const double turn = std::abs(bearing);
  if (turn == 0.0) return {};
  const double reach = range * std::cos(turn);
  const double slope = std::tan(turn);
  return {.a = -slope / (reach * reach), .b = 2.0 * slope / reach};
}

OrbitDirection DirectionForBearing(double bearing) {
  return bearing < 0.0 ? OrbitDirection::kClockwise
                       : OrbitDirection::kCounterclockwise;
}

std::vector<Point2> SamplePath(const PathFunction& path, double length,
                               double step) {
  const int segments =
      std::max(1, static_cast<int>(std::ceil(length / step - 1e-9)));
  std::vector<Point2> samples;
  samples.reserve(segments + 1);
  for (int i = 0; i <= segments; ++i) {
    const double along = length * i / segments;
    samples.push_back(path.ToWorld({along, path.Spline(along)}));
  }
  return samples;
}

double PolylineDistance(const std::vector<Point2>& a,
                        const std::vector<Point2>& b) {
  double best = std::numeric_limits<double>::infinity();
  if (a.empty() || b.empty()) return best;
  const size_t na = a.size() == 1 ? 1 : a.size() - 1;
  const size_t nb = b.size() == 1 ? 1 : b.size() - 1;
  for (size_t i = 0; i < na; ++i) {
    const Point2 a0 = a[i];
    const Point2 a1 = a.size() == 1 ? a[i] : a[i + 1];
    for (size_t j = 0; j < nb; ++j) {
      const Point2 b0 = b[j];
      const Point2 b1 = b.size() == 1 ? b[j] : b[j + 1];
      best = std::min(best, geometry::SegmentSegmentDistance(a0, a1, b0, b1));
    }
  }
  return best;
}

absl::StatusOr<CandidateSet> GenerateCandidates(const LocalVertexSet& local,
                                                const geometry::RobotPose& pose,
                                                int fan_size,
                                                const CandidateConfig& config) {
  if (fan_size < 3 || fan_size % 2 == 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("fan size must be odd and >= 3, got %d", fan_size));
  }
  if (!(config.sample_step > 0.0)) {
    return absl::InvalidArgumentError("sample step must be positive");
  }
  const double range = config.fov.max_range;
  const double half = config.fov.half_angle;

  CandidateSet set;
  set.candidates.reserve(fan_size);
  for (int i = 0; i < fan_size; ++i) {
    // Written so the center index gives exactly zero.
    const double bearing =
        half * (static_cast<double>(2 * i - (fan_size - 1)) / (fan_size - 1));
    const SplineCoeffs coeffs = FanSpline(bearing, range);
    absl::StatusOr<PathFunction> path =
        PathFunction::Create(pose.position, pose.heading, coeffs,
                             DirectionForBearing(bearing),
                             config.fixed_attraction_rate > 0.0
                                 ? config.fixed_attraction_rate
                                 : AttractionRateForCurvature(coeffs));
    if (!path.ok()) return path.status();
    const double reach = range * std::cos(bearing);
    Candidate candidate{.path = *path,
                        .terminal_bearing = bearing,
                        .terminal = path->ToWorld({reach, path->Spline(reach)}),
                        .polyline = {}};
    candidate.polyline = SamplePath(*path, reach, config.sample_step);
    set.candidates.push_back(std::move(candidate));
  }

  set.feasible.assign(fan_size, true);
  for (int i = 0; i < fan_size; ++i) {
    for (const ObstacleCluster& cluster : local.obstacles) {
      if (PolylineDistance(set.candidates[i].polyline, cluster.vertices) <
          config.inflation_radius) {
        set.feasible[i] = false;
        break;
      }
    }
  }
  return set;
}

}  // namespace explore::planning
