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

#ifndef EXPLORE_PLANNING_REGION_H_
#define EXPLORE_PLANNING_REGION_H_

#include <vector>

#include "explore/geometry/vec2.h"

namespace explore::planning {

// A simple polygon with optional holes. Outer rings are counterclockwise and
// holes clockwise; rings are open (the first vertex is not repeated).
struct PolygonWithHoles {
  std::vector<geometry::Point2> outer;
  std::vector<std::vector<geometry::Point2>> holes;
};

// A planar region stored as the canonical, non-overlapping union of its
// polygons, with the area cached. Value type; operations return new regions.
class Region2 {
 public:
  Region2() = default;

  // Region bounded by a single ring of either orientation. Rings with fewer
  // than three distinct vertices, or with zero area, give an empty region.
  static Region2 FromRing(const std::vector<geometry::Point2>& ring);
  // Region of a ring that is star-shaped with respect to `center` (every
  // vertex visible from it), such as a visibility polygon. Robust to rings
  // that touch themselves along rays from the center.
  static Region2 FromStar(geometry::Point2 center,
                          const std::vector<geometry::Point2>& ring);
  static Region2 Rectangle(geometry::Point2 min, geometry::Point2 max);
  // A ring minus the given hole rings.
  static Region2 FromRingWithHoles(
      const std::vector<geometry::Point2>& ring,
      const std::vector<std::vector<geometry::Point2>>& holes);

  Region2 Union(const Region2& other) const;
  Region2 Difference(const Region2& other) const;
  Region2 Intersection(const Region2& other) const;

  double Area() const { return area_; }
  bool IsEmpty() const { return parts_.empty(); }
  // Closed containment: boundary points count as inside.
  bool Contains(geometry::Point2 p) const;
  const std::vector<PolygonWithHoles>& parts() const { return parts_; }

 private:
  explicit Region2(std::vector<PolygonWithHoles> parts);

  std::vector<PolygonWithHoles> parts_;
  double area_ = 0.0;
};

}  // namespace explore::planning

#endif  // EXPLORE_PLANNING_REGION_H_
