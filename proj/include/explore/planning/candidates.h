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

#ifndef EXPLORE_PLANNING_CANDIDATES_H_
#define EXPLORE_PLANNING_CANDIDATES_H_

#include <vector>

#include "absl/status/statusor.h"
#include "explore/geometry/path_function.h"
#include "explore/geometry/vec2.h"
#include "explore/planning/local_vertices.h"
#include "explore/planning/point_cloud.h"

namespace explore::planning {

struct CandidateConfig {
  FovConfig fov;
  // Clearance the swept corridor must keep from every obstacle polyline.
  double inflation_radius = 0.5;
  // Arc-length spacing of the sampled candidate polyline.
  double sample_step = 0.05;
  // When positive, every candidate uses this attraction rate instead of the
  // curvature-based choice.
  double fixed_attraction_rate = 0.0;
};

struct Candidate {
  geometry::PathFunction path;
  double terminal_bearing = 0.0;  // relative to the creation heading
  geometry::Point2 terminal;      // world frame, on the FOV arc
  std::vector<geometry::Point2> polyline;  // world frame, anchor to terminal
};

// Candidates ordered by terminal bearing, right (negative) to left.
struct CandidateSet {
  std::vector<Candidate> candidates;
  std::vector<bool> feasible;
};

// Attraction rate for a spline by its curvature at the anchor, |2b|:
// below 0.05 -> 0.05, above 0.5 -> 0.4, otherwise 0.1.
double AttractionRateForCurvature(const geometry::SplineCoeffs& coeffs);

// Coefficients of the cubic that leaves the anchor tangent to the heading and
// reaches the point at `bearing` and `range` with slope tan(bearing), in the
// frame of the orbit direction the bearing implies (left is counterclockwise).
geometry::SplineCoeffs FanSpline(double bearing, double range);

// Orbit direction for a terminal bearing: left turns are counterclockwise,
// right turns clockwise, straight ahead counterclockwise.
geometry::OrbitDirection DirectionForBearing(double bearing);

// Samples the zero contour of `path` from the anchor to local abscissa
// `length` at approximately `step` spacing (both ends included).
std::vector<geometry::Point2> SamplePath(const geometry::PathFunction& path,
                                         double length, double step);

// Shortest distance between two polylines; a single-point polyline is a
// point. Returns +inf when either is empty.
double PolylineDistance(const std::vector<geometry::Point2>& a,
                        const std::vector<geometry::Point2>& b);

// Builds an odd fan of `fan_size` cubic candidates anchored at `pose` whose
// terminal bearings are evenly spaced over the field of view, and marks a
// candidate infeasible when its sampled contour comes closer than the
// inflation radius to any obstacle cluster.
absl::StatusOr<CandidateSet> GenerateCandidates(const LocalVertexSet& local,
                                                const geometry::RobotPose& pose,
                                                int fan_size,
                                                const CandidateConfig& config);

}  // namespace explore::planning

#endif  // EXPLORE_PLANNING_CANDIDATES_H_
