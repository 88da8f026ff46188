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

#include "explore/sim/world.h"

#include <limits>
#include <string>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>

#include "absl/strings/str_format.h"

namespace explore::sim {
namespace {

namespace bg = boost::geometry;
using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint, false, false>;

BPolygon ToBoost(const Polygon& ring) {
  BPolygon polygon;
  for (const geometry::Point2& p : ring) polygon.outer().emplace_back(p.x, p.y);
  bg::correct(polygon);
  return polygon;
}

absl::Status CheckRing(const Polygon& ring, const std::string& what) {
  if (ring.size() < 3) {
    return absl::InvalidArgumentError(what + " needs at least 3 vertices");
  }
  for (const geometry::Point2& p : ring) {
    if (!geometry::IsFinite(p)) {
      return absl::InvalidArgumentError(what + " has a non-finite vertex");
    }
  }
  std::string reason;
  const BPolygon polygon = ToBoost(ring);
  if (!bg::is_valid(polygon, reason)) {
    return absl::InvalidArgumentError(what + " is not simple: " + reason);
  }
  if (!(bg::area(polygon) > 0.0)) {
    return absl::InvalidArgumentError(what + " has zero area");
  }
  return absl::OkStatus();
}

}  // namespace

absl::Status ValidateWorld(const World& world) {
  if (absl::Status s = CheckRing(world.boundary, "boundary"); !s.ok()) return s;
  const BPolygon boundary = ToBoost(world.boundary);
  std::vector<BPolygon> obstacles;
  for (size_t i = 0; i < world.obstacles.size(); ++i) {
    const std::string what = absl::StrFormat("obstacle %d", i);
    if (absl::Status s = CheckRing(world.obstacles[i], what); !s.ok()) return s;
    obstacles.push_back(ToBoost(world.obstacles[i]));
    if (!bg::within(obstacles.back(), boundary)) {
      return absl::InvalidArgumentError(what + " is not inside the boundary");
    }
    for (size_t j = 0; j < i; ++j) {
      if (bg::intersects(obstacles[j], obstacles[i])) {
        return absl::InvalidArgumentError(
            absl::StrFormat("obstacles %d and %d overlap", j, i));
      }
    }
  }
  return absl::OkStatus();
}

std::vector<Segment> WorldEdges(const World& world) {
  std::vector<Segment> edges;
  auto add_ring = [&edges](const Polygon& ring) {
    for (size_t i = 0; i < ring.size(); ++i) {
      edges.push_back({ring[i], ring[(i + 1) % ring.size()]});
    }
  };
  add_ring(world.boundary);
  for (const Polygon& obstacle : world.obstacles) add_ring(obstacle);
  return edges;
}

bool PointInPolygon(const Polygon& polygon, geometry::Point2 p) {
  bool inside = false;
  for (size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
    const geometry::Point2 a = polygon[i];
    const geometry::Point2 b = polygon[j];
    if ((a.y > p.y) != (b.y > p.y) &&
        p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
      inside = !inside;
    }
  }
  return inside;
}

planning::Region2 FreeSpace(const World& world) {
  return planning::Region2::FromRingWithHoles(world.boundary, world.obstacles);
}

double Clearance(const World& world, geometry::Point2 p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Segment& edge : WorldEdges(world)) {
    best = std::min(best, geometry::PointSegmentDistance(p, edge.a, edge.b));
  }
  return best;
}

bool CollisionCheck(const World& world, const geometry::RobotPose& pose,
                    double radius) {
  const geometry::Point2 p = pose.position;
  if (!PointInPolygon(world.boundary, p)) return true;
  for (const Polygon& obstacle : world.obstacles) {
    if (PointInPolygon(obstacle, p)) return true;
  }
  return Clearance(world, p) < radius;
}

}  // namespace explore::sim
