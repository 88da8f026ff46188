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

#ifndef EXPLORE_GEOMETRY_VEC2_H_
#define EXPLORE_GEOMETRY_VEC2_H_

#include <cmath>
#include <numbers>
#include <ostream>

namespace explore::geometry {

// A direction or displacement in the world frame.
struct Vec2 {
  double dx = 0.0;
  double dy = 0.0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// A location in the world frame, meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.dx + b.dx, a.dy + b.dy}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.dx - b.dx, a.dy - b.dy}; }
inline Vec2 operator-(Vec2 v) { return {-v.dx, -v.dy}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.dx, s * v.dy}; }
inline Vec2 operator*(Vec2 v, double s) { return {s * v.dx, s * v.dy}; }

inline Vec2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(Point2 p, Vec2 v) { return {p.x + v.dx, p.y + v.dy}; }
inline Point2 operator-(Point2 p, Vec2 v) { return {p.x - v.dx, p.y - v.dy}; }

inline double Dot(Vec2 a, Vec2 b) { return a.dx * b.dx + a.dy * b.dy; }
inline double Cross(Vec2 a, Vec2 b) { return a.dx * b.dy - a.dy * b.dx; }
inline double Norm(Vec2 v) { return std::hypot(v.dx, v.dy); }
inline double Distance(Point2 a, Point2 b) { return Norm(a - b); }

inline bool IsFinite(Vec2 v) {
  return std::isfinite(v.dx) && std::isfinite(v.dy);
}
inline bool IsFinite(Point2 p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

inline Vec2 UnitVector(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

// Scales `v` down so that its norm does not exceed `cap`.
inline Vec2 ClampNorm(Vec2 v, double cap) {
  const double norm = Norm(v);
  if (norm <= cap || norm == 0.0) return v;
  return (cap / norm) * v;
}

// Wraps an angle into (-pi, pi].
inline double WrapAngle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = std::remainder(angle, kTwoPi);
  if (wrapped <= -std::numbers::pi) wrapped += kTwoPi;
  return wrapped;
}

// Planar pose; heading is kept in (-pi, pi].
struct RobotPose {
  Point2 position;
  double heading = 0.0;

  friend bool operator==(const RobotPose&, const RobotPose&) = default;
};

// Maps a point given in the pose's body frame (x forward, y left) to world.
inline Point2 BodyToWorld(const RobotPose& pose, Point2 body) {
  const double c = std::cos(pose.heading);
  const double s = std::sin(pose.heading);
  return {pose.position.x + c * body.x - s * body.y,
          pose.position.y + s * body.x + c * body.y};
}

inline Point2 WorldToBody(const RobotPose& pose, Point2 world) {
  const double c = std::cos(pose.heading);
  const double s = std::sin(pose.heading);
  const Vec2 d = world - pose.position;
  return {c * d.dx + s * d.dy, -s * d.dx + c * d.dy};
}

// Closest distance from `p` to segment [a, b].
double PointSegmentDistance(Point2 p, Point2 a, Point2 b);

// True when segments [a, b] and [c, d] share at least one point.
bool SegmentsIntersect(Point2 a, Point2 b, Point2 c, Point2 d);

// Closest distance between segments [a, b] and [c, d].
double SegmentSegmentDistance(Point2 a, Point2 b, Point2 c, Point2 d);

inline std::ostream& operator<<(std::ostream& os, Vec2 v) {
  return os << "Vec2(" << v.dx << ", " << v.dy << ")";
}
inline std::ostream& operator<<(std::ostream& os, Point2 p) {
  return os << "Point2(" << p.x << ", " << p.y << ")";
}

}  // namespace explore::geometry

#endif  // EXPLORE_GEOMETRY_VEC2_H_
