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

#include "explore/planning/coverage.h"

#include <algorithm>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace explore::planning {

absl::StatusOr<CoverageStack> UpdateCoverage(CoverageStack stack,
                                             const geometry::PathFunction& path,
                                             double stamp,
                                             const Region2& region) {
  if (!stack.entries.empty() && !(stamp > stack.entries.back().stamp)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("coverage stamp %.9g does not follow %.9g", stamp,
                        stack.entries.back().stamp));
  }
  stack.entries.push_back({path, stamp});
  stack.explored = stack.explored.Union(region);
  return stack;
}

double CoveredFraction(const Region2& explored, const Region2& free_space) {
  const double total = free_space.Area();
  if (!(total > 0.0)) return 0.0;
  const double uncovered = free_space.Difference(explored).Area();
  return std::clamp(1.0 - uncovered / total, 0.0, 1.0);
}

bool IsComplete(const CoverageStack& stack, const Region2& free_space,
                double threshold) {
  const double total = free_space.Area();
  if (!(total > 0.0)) return false;
  const double uncovered = free_space.Difference(stack.explored).Area();
  // Slack for slivers the polygon overlay leaves behind.
  constexpr double kSlack = 1e-12;
  return uncovered / total <= 1.0 - threshold + kSlack;
}

}  // namespace explore::planning
