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

#include "explore/geometry/path_function.h"

#include <cmath>

#include "absl/status/status.h"

namespace explore::geometry {

std::ostream& operator<<(std::ostream& os, OrbitDirection direction) {
  return os << (direction == OrbitDirection::kCounterclockwise ? "ccw"
                                                               : "cw");
}

absl::StatusOr<PathFunction> PathFunction::Create(Point2 anchor,
                                                  double heading,
                                                  SplineCoeffs coeffs,
                                                  OrbitDirection direction,
                                                  double attraction_rate) {
  if (!(attraction_rate > 0.0) || !std::isfinite(attraction_rate)) {
    return absl::InvalidArgumentError("attraction rate must be positive");
  }
  if (!IsFinite(anchor) || !std::isfinite(heading) ||
      !std::isfinite(coeffs.a) || !std::isfinite(coeffs.b) ||
      !std::isfinite(coeffs.c) || !std::isfinite(coeffs.d)) {
    return absl::InvalidArgumentError("path function inputs must be finite");
  }
  return PathFunction(anchor, heading, coeffs, direction, attraction_rate);
}

PathFunction PathFunction::StraightLine(Point2 anchor, double heading,
                                        double attraction_rate) {
  return PathFunction(anchor, heading, SplineCoeffs{},
                      OrbitDirection::kCounterclockwise, attraction_rate);
}

PathFunction::PathFunction(Point2 anchor, double heading, SplineCoeffs coeffs,
                           OrbitDirection direction, double attraction_rate)
    : anchor_(anchor),
      heading_(heading),
      coeffs_(coeffs),
      direction_(direction),
      attraction_rate_(attraction_rate),
      cos_heading_(std::cos(heading)),
      sin_heading_(std::sin(heading)) {}

LocalPoint PathFunction::ToLocal(Point2 p) const {
  const double dx = p.x - anchor_.x;
  const double dy = p.y - anchor_.y;
  return {cos_heading_ * dx + sin_heading_ * dy,
          LateralSign() * (-sin_heading_ * dx + cos_heading_ * dy)};
}

Point2 PathFunction::ToWorld(LocalPoint local) const {
  const double lateral = LateralSign() * local.lateral;
  return {anchor_.x + cos_heading_ * local.along - sin_heading_ * lateral,
          anchor_.y + sin_heading_ * local.along + cos_heading_ * lateral};
}

double PathFunction::Eval(Point2 p) const {
  const LocalPoint local = ToLocal(p);
  return Spline(local.along) - local.lateral;
}

Vec2 PathFunction::Gradient(Point2 p) const {
  // Chain rule through the rigid (possibly mirrored) frame change:
  // d(phi)/dx' = spline slope, d(phi)/dy' = -1.
  const double slope = SplineSlope(ToLocal(p).along);
  const double sign = LateralSign();
  return {slope * cos_heading_ + sign * sin_heading_,
          slope * sin_heading_ - sign * cos_heading_};
}

}  // namespace explore::geometry
