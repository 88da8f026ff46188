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

#include "explore/geometry/guidance_field.h"

#include <cmath>

#include "absl/status/status.h"

namespace explore::geometry {

absl::StatusOr<std::vector<FieldSample>> SampleFieldGrid(
    const PathFunction& path, const Bounds& bounds, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    return absl::InvalidArgumentError("resolution must be positive");
  }
  const double width = bounds.max.x - bounds.min.x;
  const double height = bounds.max.y - bounds.min.y;
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) ||
      !std::isfinite(height)) {
    return absl::InvalidArgumentError("bounds must have positive extent");
  }
  // The small slack keeps exact multiples (2 m at 1 m) from losing an edge.
  const long columns = static_cast<long>(std::floor(width / resolution + 1e-9)) + 1;
  const long rows = static_cast<long>(std::floor(height / resolution + 1e-9)) + 1;
  if (columns * rows > 4'000'000) {
    return absl::InvalidArgumentError("field grid too dense");
  }

  std::vector<FieldSample> samples;
  samples.reserve(static_cast<size_t>(columns * rows));
  for (long row = 0; row < rows; ++row) {
    for (long col = 0; col < columns; ++col) {
      FieldSample sample;
      sample.at = {bounds.min.x + static_cast<double>(col) * resolution,
                   bounds.min.y + static_cast<double>(row) * resolution};
      sample.value = path.Eval(sample.at);
      sample.gradient = path.Gradient(sample.at);
      sample.guidance =
          GuidanceVector(sample.value, sample.gradient, path.direction(),
                         path.attraction_rate());
      samples.push_back(sample);
    }
  }
  return samples;
}

}  // namespace explore::geometry
