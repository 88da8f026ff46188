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

#ifndef EXPLORE_GEOMETRY_GUIDANCE_FIELD_H_
#define EXPLORE_GEOMETRY_GUIDANCE_FIELD_H_

#include <vector>

#include "absl/status/statusor.h"
#include "explore/geometry/path_function.h"
#include "explore/geometry/vec2.h"

namespace explore::geometry {

// Path-following vector for a scalar field with the given value and gradient:
// E grad - k_e * value * grad. The first term runs along the contour, the
// second pulls toward it. Works for any differentiable level-set function,
// not just splines.
inline Vec2 GuidanceVector(double value, Vec2 gradient,
                           OrbitDirection direction, double attraction_rate) {
  return ApplyDirection(direction, gradient) -
         (attraction_rate * value) * gradient;
}

inline Vec2 GuidanceField(const PathFunction& path, Point2 p) {
  return GuidanceVector(path.Eval(p), path.Gradient(p), path.direction(),
                        path.attraction_rate());
}

// One accumulation step of the tracker vector: prev + step * guidance.
// A non-positive step leaves the tracker unchanged.
inline Vec2 TrackStep(Vec2 prev, Vec2 guidance, double step) {
  if (!(step > 0.0)) return prev;
  return prev + step * guidance;
}

inline Vec2 TrackStep(Vec2 prev, const PathFunction& path, Point2 p,
                      double step) {
  if (!(step > 0.0)) return prev;
  return TrackStep(prev, GuidanceField(path, p), step);
}

struct FieldSample {
  Point2 at;
  double value = 0.0;
  Vec2 gradient;
  Vec2 guidance;
};

// Axis-aligned rectangle.
struct Bounds {
  Point2 min;
  Point2 max;
};

// Samples the guidance field on a row-major lattice that includes the bounds'
// edges. Rejects non-positive resolution and degenerate bounds.
absl::StatusOr<std::vector<FieldSample>> SampleFieldGrid(
    const PathFunction& path, const Bounds& bounds, double resolution);

}  // namespace explore::geometry

#endif  // EXPLORE_GEOMETRY_GUIDANCE_FIELD_H_
