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

#include "explore/planning/region.h"

#include <utility>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>

namespace explore::planning {
namespace {

namespace bg = boost::geometry;

using BPoint = bg::model::d2::point_xy<double>;
// Counterclockwise and closed; the open rings of PolygonWithHoles are closed
// on the way in and reopened on the way out.
using BPolygon = bg::model::polygon<BPoint, false, true>;
using BMulti = bg::model::multi_polygon<BPolygon>;
using geometry::Point2;

BPolygon::ring_type ToRing(const std::vector<Point2>& points) {
  BPolygon::ring_type ring;
  for (const Point2& p : points) {
    if (!ring.empty() && ring.back().x() == p.x && ring.back().y() == p.y) {
      continue;
    }
    ring.emplace_back(p.x, p.y);
  }
  while (ring.size() > 1 && ring.front().x() == ring.back().x() &&
         ring.front().y() == ring.back().y()) {
    ring.pop_back();
  }
  if (ring.size() < 3) return {};
  ring.push_back(ring.front());
  return ring;
}

std::vector<Point2> FromRing(const BPolygon::ring_type& ring) {
  std::vector<Point2> points;
  points.reserve(ring.size());
  for (const BPoint& p : ring) points.push_back({p.x(), p.y()});
  if (points.size() > 1 && points.front() == points.back()) points.pop_back();
  return points;
}

BMulti ToMulti(const std::vector<PolygonWithHoles>& parts) {
  BMulti multi;
  multi.reserve(parts.size());
  for (const PolygonWithHoles& part : parts) {
    BPolygon polygon;
    polygon.outer() = ToRing(part.outer);
    for (const auto& hole : part.holes) polygon.inners().push_back(ToRing(hole));
    multi.push_back(std::move(polygon));
  }
  return multi;
}

std::vector<PolygonWithHoles> FromMulti(const BMulti& multi) {
  std::vector<PolygonWithHoles> parts;
  parts.reserve(multi.size());
  for (const BPolygon& polygon : multi) {
    if (polygon.outer().size() < 4) continue;
    PolygonWithHoles part;
    part.outer = FromRing(polygon.outer());
    for (const auto& inner : polygon.inners()) {
      if (inner.size() >= 4) part.holes.push_back(FromRing(inner));
    }
    parts.push_back(std::move(part));
  }
  return parts;
}

// Orients a polygon; if it is still not valid (self-touching spikes and the
// like), runs it through an overlay against the empty set, which rebuilds
// the rings from their traversal.
BMulti Normalize(BPolygon polygon) {
  bg::correct(polygon);
  BMulti out;
  if (bg::is_valid(polygon)) {
    out.push_back(std::move(polygon));
    return out;
  }
  bg::union_(polygon, BPolygon(), out);
  bg::correct(out);
  return out;
}

bool SamePoint(const BPoint& a, const BPoint& b) {
  return a.x() == b.x() && a.y() == b.y();
}

}  // namespace

Region2::Region2(std::vector<PolygonWithHoles> parts)
    : parts_(std::move(parts)) {
  area_ = bg::area(ToMulti(parts_));
}

Region2 Region2::FromRing(const std::vector<Point2>& ring) {
  return FromRingWithHoles(ring, {});
}

Region2 Region2::FromRingWithHoles(
    const std::vector<Point2>& ring,
    const std::vector<std::vector<Point2>>& holes) {
  BPolygon polygon;
  polygon.outer() = ToRing(ring);
  if (polygon.outer().empty()) return Region2();
  BMulti outer = Normalize(polygon);
  if (holes.empty()) {
    BMulti cleaned;
    for (auto& part : outer) {
      if (bg::area(part) > 0.0) cleaned.push_back(std::move(part));
    }
    return Region2(FromMulti(cleaned));
  }
  BMulti hole_union;
  for (const auto& hole : holes) {
    BPolygon h;
    h.outer() = ToRing(hole);
    if (h.outer().empty()) continue;
    BMulti normalized = Normalize(h);
    BMulti merged;
    bg::union_(hole_union, normalized, merged);
    hole_union = std::move(merged);
  }
  BMulti result;
  bg::difference(outer, hole_union, result);
  return Region2(FromMulti(result));
}

Region2 Region2::FromStar(Point2 center, const std::vector<Point2>& ring) {
  BPolygon polygon;
  polygon.outer() = ToRing(ring);
  if (polygon.outer().empty()) return Region2();
  bg::correct(polygon);
  BMulti out;
  if (bg::is_valid(polygon)) {
    out.push_back(std::move(polygon));
    return Region2(FromMulti(out));
  }
  // Union of the fan triangles; each is valid on its own, so the overlay is
  // well-posed even when the ring touches itself.
  const BPoint c(center.x, center.y);
  const auto& pts = polygon.outer();
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const BPoint& a = pts[i];
    const BPoint& b = pts[i + 1];
    if (SamePoint(a, c) || SamePoint(b, c)) continue;
    BPolygon triangle;
    triangle.outer() = {c, a, b, c};
    bg::correct(triangle);
    if (!(bg::area(triangle) > 0.0)) continue;
    BMulti merged;
    bg::union_(out, triangle, merged);
    out = std::move(merged);
  }
  return Region2(FromMulti(out));
}

Region2 Region2::Rectangle(Point2 min, Point2 max) {
  return FromRing({min, {max.x, min.y}, max, {min.x, max.y}});
}

Region2 Region2::Union(const Region2& other) const {
  if (other.IsEmpty()) return *this;
  if (IsEmpty()) return other;
  BMulti out;
  bg::union_(ToMulti(parts_), ToMulti(other.parts_), out);
  return Region2(FromMulti(out));
}

Region2 Region2::Difference(const Region2& other) const {
  if (IsEmpty() || other.IsEmpty()) return *this;
  BMulti out;
  bg::difference(ToMulti(parts_), ToMulti(other.parts_), out);
  return Region2(FromMulti(out));
}

Region2 Region2::Intersection(const Region2& other) const {
  if (IsEmpty() || other.IsEmpty()) return Region2();
  BMulti out;
  bg::intersection(ToMulti(parts_), ToMulti(other.parts_), out);
  return Region2(FromMulti(out));
}

bool Region2::Contains(Point2 p) const {
  return bg::covered_by(BPoint(p.x, p.y), ToMulti(parts_));
}

}  // namespace explore::planning
