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

#ifndef EXPLORE_PLANNING_COVERAGE_H_
#define EXPLORE_PLANNING_COVERAGE_H_

#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "explore/geometry/path_function.h"
#include "explore/planning/local_vertices.h"
#include "explore/planning/region.h"

namespace explore::planning {

struct CoverageEntry {
  geometry::PathFunction path;
  double stamp = 0.0;
};

// The coverage record: every adopted path with its time, plus the union of
// everything seen when those paths were adopted. Also carries the planner's
// memory between steps.
struct CoverageStack {
  std::vector<CoverageEntry> entries;
  Region2 explored;
  // Fraction of the configured free space inside `explored`, refreshed on
  // every update that has free space to measure against.
  double covered_fraction = 0.0;
  // Vertex set at the last decision; the next step's scene is compared
  // against it.
  std::optional<LocalVertexSet> reference_scene;
  bool stuck = false;
};

// Appends <path, stamp> and unions `region` into the explored area. Rejects a
// stamp that does not exceed the last entry's.
absl::StatusOr<CoverageStack> UpdateCoverage(CoverageStack stack,
                                             const geometry::PathFunction& path,
                                             double stamp,
                                             const Region2& region);

// Share of `free_space` covered by `explored`, in [0, 1]; 0 for an empty
// free space.
double CoveredFraction(const Region2& explored, const Region2& free_space);

// True iff area(free \ explored) / area(free) <= 1 - threshold. An empty free
// space is never complete.
bool IsComplete(const CoverageStack& stack, const Region2& free_space,
                double threshold = 0.95);

}  // namespace explore::planning

#endif  // EXPLORE_PLANNING_COVERAGE_H_
