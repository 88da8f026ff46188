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

#ifndef EXPLORE_GEOMETRY_PATH_FUNCTION_H_
#define EXPLORE_GEOMETRY_PATH_FUNCTION_H_

#include <ostream>

#include "absl/status/statusor.h"
#include "explore/geometry/vec2.h"

namespace explore::geometry {

// Sense in which the guidance field orbits the zero contour.
enum class OrbitDirection { kCounterclockwise, kClockwise };

std::ostream& operator<<(std::ostream& os, OrbitDirection direction);

// Applies the following-direction matrix: counterclockwise rotates by +90
// degrees, clockwise by -90 degrees (the negated matrix).
inline Vec2 ApplyDirection(OrbitDirection direction, Vec2 v) {
  return direction == OrbitDirection::kCounterclockwise ? Vec2{-v.dy, v.dx}
                                                        : Vec2{v.dy, -v.dx};
}

// Coefficients of a(x')^3 + b(x')^2 + c(x') + d in the path's local frame.
struct SplineCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  friend bool operator==(const SplineCoeffs&, const SplineCoeffs&) = default;
};

// Coordinates of a point in a path's local frame.
struct LocalPoint {
  double along = 0.0;    // x', along the creation heading
  double lateral = 0.0;  // y', toward the turn side
};

// A path function phi(p) = a x'^3 + b x'^2 + c x' + d - y' whose zero level
// set is the trajectory to follow.
//
// The local frame is anchored at `anchor` with x' along `heading`. Its y'
// axis points to the left for counterclockwise paths and to the right for
// clockwise ones, so phi < 0 is always the inner side of the turn and both
// orbit directions traverse the curve in the direction of increasing x'.
class PathFunction {
 public:
  // Fails unless the attraction rate is positive and all inputs are finite.
  static absl::StatusOr<PathFunction> Create(Point2 anchor, double heading,
                                             SplineCoeffs coeffs,
                                             OrbitDirection direction,
                                             double attraction_rate);

  // The straight line through `anchor` along `heading`.
  static PathFunction StraightLine(Point2 anchor, double heading,
                                   double attraction_rate);

  double Eval(Point2 p) const;
  Vec2 Gradient(Point2 p) const;

  LocalPoint ToLocal(Point2 p) const;
  Point2 ToWorld(LocalPoint local) const;

  // Value of the cubic at local abscissa x' (the contour's lateral offset).
  double Spline(double along) const {
    return ((coeffs_.a * along + coeffs_.b) * along + coeffs_.c) * along +
           coeffs_.d;
  }
  double SplineSlope(double along) const {
    return (3.0 * coeffs_.a * along + 2.0 * coeffs_.b) * along + coeffs_.c;
  }

  Point2 anchor() const { return anchor_; }
  double heading() const { return heading_; }
  const SplineCoeffs& coeffs() const { return coeffs_; }
  OrbitDirection direction() const { return direction_; }
  double attraction_rate() const { return attraction_rate_; }

 private:
  PathFunction(Point2 anchor, double heading, SplineCoeffs coeffs,
               OrbitDirection direction, double attraction_rate);

  double LateralSign() const {
    return direction_ == OrbitDirection::kCounterclockwise ? 1.0 : -1.0;
  }

  Point2 anchor_;
  double heading_;
  SplineCoeffs coeffs_;
  OrbitDirection direction_;
  double attraction_rate_;
  double cos_heading_;
  double sin_heading_;
};

inline double EvalPath(const PathFunction& path, Point2 p) {
  return path.Eval(p);
}
inline Vec2 GradPath(const PathFunction& path, Point2 p) {
  return path.Gradient(p);
}

}  // namespace explore::geometry

#endif  // EXPLORE_GEOMETRY_PATH_FUNCTION_H_
