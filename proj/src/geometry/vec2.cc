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

#include "explore/geometry/vec2.h"

#include <algorithm>

namespace explore::geometry {
namespace {

// Orientation of the triple, with exact zero for collinear input.
int Orientation(Point2 a, Point2 b, Point2 c) {
  const double cross = Cross(b - a, c - a);
  if (cross > 0.0) return 1;
  if (cross < 0.0) return -1;
  return 0;
}

bool OnSegment(Point2 p, Point2 a, Point2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

double PointSegmentDistance(Point2 p, Point2 a, Point2 b) {
  const Vec2 ab = b - a;
  const double length_sq = Dot(ab, ab);
  if (length_sq == 0.0) return Distance(p, a);
  const double t = std::clamp(Dot(p - a, ab) / length_sq, 0.0, 1.0);
  return Distance(p, a + t * ab);
}

bool SegmentsIntersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = Orientation(a, b, c);
  const int o2 = Orientation(a, b, d);
  const int o3 = Orientation(c, d, a);
  const int o4 = Orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && OnSegment(c, a, b)) return true;
  if (o2 == 0 && OnSegment(d, a, b)) return true;
  if (o3 == 0 && OnSegment(a, c, d)) return true;
  if (o4 == 0 && OnSegment(b, c, d)) return true;
  return false;
}

double SegmentSegmentDistance(Point2 a, Point2 b, Point2 c, Point2 d) {
  if (SegmentsIntersect(a, b, c, d)) return 0.0;
  return std::min({PointSegmentDistance(a, c, d), PointSegmentDistance(b, c, d),
                   PointSegmentDistance(c, a, b),
                   PointSegmentDistance(d, a, b)});
}

}  // namespace explore::geometry
