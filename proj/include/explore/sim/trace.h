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

#ifndef EXPLORE_SIM_TRACE_H_
#define EXPLORE_SIM_TRACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "explore/geometry/vec2.h"
#include "explore/sim/scenario.h"

namespace explore::sim {

inline constexpr std::string_view kTraceVersion = "explore-trace/1";

// One control tick.
struct TraceRecord {
  int64_t tick = 0;
  double time = 0.0;
  geometry::RobotPose pose;  // true pose at the start of the tick
  // One of: track, continue, new_path, stuck, complete, teleop.
  std::string decision;
  int path_id = 0;  // 1-based index of the path being followed; 0 = none
  int cloud_points = 0;  // summary of the most recent sweep
  int cloud_hits = 0;
  double cloud_min_range = 0.0;
  bool collision = false;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Trace {
  std::string version = std::string(kTraceVersion);
  std::string world;
  uint64_t seed = 0;
  uint64_t config_hash = 0;
  std::string config_text;  // canonical scenario text the run used
  std::vector<TraceRecord> records;
  std::optional<Outcome> outcome;
};

// FNV-1a of the canonical scenario text.
uint64_t ConfigHash(std::string_view config_text);

std::string FormatRecord(const TraceRecord& record);
// Self-describing text form: '#' header lines with metadata and the embedded
// scenario, a field legend, one line per record, and an outcome footer.
std::string FormatTrace(const Trace& trace);
absl::StatusOr<Trace> ParseTrace(std::string_view text);

struct TraceComparison {
  bool match = true;
  // Tick of the first differing record (or of the first record present in
  // only one trace); absent when only metadata differs.
  std::optional<int64_t> first_divergent_tick;
  std::string detail;
};

// Compares two traces by their exact text rendering.
TraceComparison CompareTraces(const Trace& expected, const Trace& actual);

}  // namespace explore::sim

#endif  // EXPLORE_SIM_TRACE_H_
