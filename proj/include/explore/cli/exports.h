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


#ifndef EXPLORE_CLI_EXPORTS_H_
#define EXPLORE_CLI_EXPORTS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "explore/sim/scenario.h"
#include "explore/sim/simulation.h"
#include "explore/sim/trace.h"

namespace explore::cli {

// Height of the planar slice in point-map exports. Maps are written z-up, the
// way the depth camera's clouds are usually stored.
inline constexpr double kSliceHeight = 0.3;

struct MapPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Recovers the scenario embedded in a trace, checking its hash.
absl::StatusOr<sim::Scenario> ScenarioFromTrace(const sim::Trace& trace);

// Re-runs the trace's scenario and compares the result with the trace.
absl::StatusOr<sim::TraceComparison> Replay(const sim::Trace& trace);

// CSV with a header row: tick,time,x,y,heading,decision,path_id.
std::string TrajectoryTable(const sim::Trace& trace);

// Turns every obstacle return of a sweep into a world-frame map point, using
// the pose the robot believed in when it took the sweep.
void AppendSweep(const planning::PointCloud& cloud,
                 std::vector<MapPoint>* points);

// Keeps points 0, n, 2n, ...; n = 1 is the identity. Rejects n = 0 by
// returning nothing.
std::vector<MapPoint> FilterEveryNth(const std::vector<MapPoint>& points,
                                     size_t n);

// One "x y z" line per point.
std::string FormatPointMap(const std::vector<MapPoint>& points);

// Re-runs the trace (which must replay exactly) and collects its point map.
absl::StatusOr<std::vector<MapPoint>> PointMapFromTrace(
    const sim::Trace& trace);

// SVG of the situation right after control tick `tick`: walls, explored
// area, sensed clusters, guidance-field arrows (class "arrow") and the
// followed path's zero contour in cyan (class "contour"). OUT_OF_RANGE for a
// tick the trace does not contain; FAILED_PRECONDITION if no path was being
// followed yet.
absl::StatusOr<std::string> FieldSvg(const sim::Trace& trace, int64_t tick);

}  // namespace explore::cli

#endif  // EXPLORE_CLI_EXPORTS_H_
