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

#include "explore/sim/trace.h"

#include <charconv>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "explore/common/number_format.h"
#include "explore/common/random.h"
#include "explore/common/text.h"

namespace explore::sim {
namespace {

constexpr std::string_view kFields =
    "tick time x y heading decision path_id cloud_n cloud_hits min_range "
    "collision";

absl::Status TraceError(int line, std::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrFormat("trace line %d: %s", line, std::string(message)));
}

bool ParseUnsigned(std::string_view text, uint64_t* out, int base) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, *out, base);
  return !text.empty() && ec == std::errc() && ptr == end;
}

}  // namespace

uint64_t ConfigHash(std::string_view config_text) {
  return Fnv1a64(config_text.data(), config_text.size());
}

std::string FormatRecord(const TraceRecord& r) {
  std::string line = std::to_string(r.tick);
  for (double v : {r.time, r.pose.position.x, r.pose.position.y,
                   r.pose.heading}) {
    line += ' ';
    line += FormatDouble(v);
  }
  line += ' ' + r.decision;
  for (int v : {r.path_id, r.cloud_points, r.cloud_hits}) {
    line += ' ';
    line += std::to_string(v);
  }
  line += ' ' + FormatDouble(r.cloud_min_range);
  line += r.collision ? " 1" : " 0";
  return line;
}

std::string FormatTrace(const Trace& trace) {
  std::string out;
  out += "# " + trace.version + "\n";
  out += "# world=" + trace.world + "\n";
  out += "# seed=" + std::to_string(trace.seed) + "\n";
  out += absl::StrFormat("# config_hash=%016x\n", trace.config_hash);
  out += "# config-begin\n";
  for (std::string_view line : Split(trace.config_text, '\n', true)) {
    out.append("# ").append(line).append("\n");
  }
  out += "# config-end\n";
  out.append("# fields: ").append(kFields).append("\n");
  for (const TraceRecord& r : trace.records) {
    out += FormatRecord(r) + "\n";
  }
  if (trace.outcome) {
    out.append("# outcome=").append(OutcomeName(*trace.outcome)).append("\n");
  }
  return out;
}

absl::StatusOr<Trace> ParseTrace(std::string_view text) {
  Trace trace;
  trace.version.clear();
  bool in_config = false;
  bool saw_fields = false;
  int line_number = 0;
  for (std::string_view line : Split(text, '\n')) {
    ++line_number;
    if (line.empty()) continue;
    if (ConsumePrefix(&line, "#")) {
      ConsumePrefix(&line, " ");
      if (in_config) {
        if (line == "config-end") {
          in_config = false;
        } else {
          trace.config_text.append(line).append("\n");
        }
        continue;
      }
      if (line_number == 1) {
        if (line != kTraceVersion) {
          return TraceError(line_number, "unsupported version '" +
                                             std::string(line) + "'");
        }
        trace.version = std::string(line);
      } else if (ConsumePrefix(&line, "world=")) {
        trace.world = std::string(line);
      } else if (ConsumePrefix(&line, "seed=")) {
        if (!ParseUnsigned(line, &trace.seed, 10)) {
          return TraceError(line_number, "bad seed");
        }
      } else if (ConsumePrefix(&line, "config_hash=")) {
        if (!ParseUnsigned(line, &trace.config_hash, 16)) {
          return TraceError(line_number, "bad config hash");
        }
      } else if (line == "config-begin") {
        in_config = true;
      } else if (ConsumePrefix(&line, "fields: ")) {
        if (line != kFields) return TraceError(line_number, "unknown field list");
        saw_fields = true;
      } else if (ConsumePrefix(&line, "outcome=")) {
        trace.outcome = ParseOutcome(line);
        if (!trace.outcome) return TraceError(line_number, "unknown outcome");
      } else {
        return TraceError(line_number, "unknown header line");
      }
      continue;
    }
    if (!saw_fields) return TraceError(line_number, "record before field list");
    const std::vector<std::string_view> f = Split(line, ' ', true);
    if (f.size() != 11) return TraceError(line_number, "expected 11 fields");
    TraceRecord r;
    const std::optional<long long> tick = ParseInt(f[0]);
    const std::optional<double> time = ParseDouble(f[1]);
    const std::optional<double> x = ParseDouble(f[2]);
    const std::optional<double> y = ParseDouble(f[3]);
    const std::optional<double> heading = ParseDouble(f[4]);
    const std::optional<long long> path_id = ParseInt(f[6]);
    const std::optional<long long> cloud_n = ParseInt(f[7]);
    const std::optional<long long> hits = ParseInt(f[8]);
    const std::optional<double> min_range = ParseDouble(f[9]);
    if (!tick || !time || !x || !y || !heading || !path_id || !cloud_n ||
        !hits || !min_range || (f[10] != "0" && f[10] != "1")) {
      return TraceError(line_number, "malformed record");
    }
    r.tick = *tick;
    r.time = *time;
    r.pose = {{*x, *y}, *heading};
    r.decision = std::string(f[5]);
    r.path_id = static_cast<int>(*path_id);
    r.cloud_points = static_cast<int>(*cloud_n);
    r.cloud_hits = static_cast<int>(*hits);
    r.cloud_min_range = *min_range;
    r.collision = f[10] == "1";
    if (!trace.records.empty() && !(r.time > trace.records.back().time)) {
      return TraceError(line_number, "time does not increase");
    }
    trace.records.push_back(std::move(r));
  }
  if (trace.version.empty()) return TraceError(1, "missing version header");
  if (in_config) return TraceError(line_number, "unterminated config block");
  return trace;
}

TraceComparison CompareTraces(const Trace& expected, const Trace& actual) {
  TraceComparison result;
  const size_t n = std::min(expected.records.size(), actual.records.size());
  for (size_t i = 0; i < n; ++i) {
    const std::string a = FormatRecord(expected.records[i]);
    const std::string b = FormatRecord(actual.records[i]);
    if (a != b) {
      result.match = false;
      result.first_divergent_tick = expected.records[i].tick;
      result.detail = "expected '" + a + "' got '" + b + "'";
      return result;
    }
  }
  if (expected.records.size() != actual.records.size()) {
    result.match = false;
    const Trace& longer =
        expected.records.size() > actual.records.size() ? expected : actual;
    result.first_divergent_tick = longer.records[n].tick;
    result.detail = absl::StrFormat("record counts differ: %d vs %d",
                                    expected.records.size(),
                                    actual.records.size());
    return result;
  }
  if (FormatTrace(expected) != FormatTrace(actual)) {
    result.match = false;
    result.detail = "metadata or outcome differ";
  }
  return result;
}

}  // namespace explore::sim
