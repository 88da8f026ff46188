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


#include "explore/cli/exports.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "explore/common/number_format.h"
#include "explore/geometry/guidance_field.h"
#include "explore/planning/local_vertices.h"
#include "explore/sim/world.h"

namespace explore::cli {
namespace {

using geometry::Point2;

constexpr double kArrowSpacing = 0.5;
constexpr double kArrowLength = 0.3;
constexpr double kContourStep = 0.05;

std::string Num(double v) { return absl::StrFormat("%.4f", v); }

std::string PointList(const std::vector<Point2>& points) {
  std::string out;
  for (const Point2& p : points) {
    if (!out.empty()) out += ' ';
    out += Num(p.x) + "," + Num(p.y);
  }
  return out;
}

std::string RingPath(const std::vector<Point2>& ring) {
  std::string d;
  for (size_t i = 0; i < ring.size(); ++i) {
    d += (i == 0 ? "M" : " L") + Num(ring[i].x) + " " + Num(ring[i].y);
  }
  return d + " Z";
}

bool InFreeSpace(const sim::World& world, Point2 p) {
  if (!sim::PointInPolygon(world.boundary, p)) return false;
  return std::none_of(world.obstacles.begin(), world.obstacles.end(),
                      [p](const sim::Polygon& o) {
                        return sim::PointInPolygon(o, p);
                      });
}

}  // namespace

absl::StatusOr<sim::Scenario> ScenarioFromTrace(const sim::Trace& trace) {
  if (sim::ConfigHash(trace.config_text) != trace.config_hash) {
    return absl::DataLossError(
        "embedded scenario does not match the trace's config hash");
  }
  absl::StatusOr<sim::Scenario> scenario = sim::ParseScenario(trace.config_text);
  if (!scenario.ok()) {
    return absl::InvalidArgumentError("embedded scenario: " +
                                      std::string(scenario.status().message()));
  }
  return scenario;
}

absl::StatusOr<sim::TraceComparison> Replay(const sim::Trace& trace) {
  absl::StatusOr<sim::Scenario> scenario = ScenarioFromTrace(trace);
  if (!scenario.ok()) return scenario.status();
  absl::StatusOr<sim::Trace> rerun = sim::RunScenario(*scenario);
  if (!rerun.ok()) return rerun.status();
  return sim::CompareTraces(trace, *rerun);
}

std::string TrajectoryTable(const sim::Trace& trace) {
  std::string out = "tick,time,x,y,heading,decision,path_id\n";
  for (const sim::TraceRecord& r : trace.records) {
    out += std::to_string(r.tick) + ',' + FormatDouble(r.time) + ',' +
           FormatDouble(r.pose.position.x) + ',' +
           FormatDouble(r.pose.position.y) + ',' +
           FormatDouble(r.pose.heading) + ',' + r.decision + ',' +
           std::to_string(r.path_id) + '\n';
  }
  return out;
}

void AppendSweep(const planning::PointCloud& cloud,
                 std::vector<MapPoint>* points) {
  for (const planning::SensorReturn& r : cloud.returns) {
    if (r.free) continue;
    const Point2 w = geometry::BodyToWorld(cloud.pose, r.point);
    points->push_back({w.x, w.y, kSliceHeight});
  }
}

std::vector<MapPoint> FilterEveryNth(const std::vector<MapPoint>& points,
                                     size_t n) {
  std::vector<MapPoint> out;
  if (n == 0) return out;
  out.reserve((points.size() + n - 1) / n);
  for (size_t i = 0; i < points.size(); i += n) out.push_back(points[i]);
  return out;
}

std::string FormatPointMap(const std::vector<MapPoint>& points) {
  std::string out;
  out.reserve(points.size() * 24);
  for (const MapPoint& p : points) {
    out += absl::StrFormat("%.4f %.4f %.4f\n", p.x, p.y, p.z);
  }
  return out;
}

absl::StatusOr<std::vector<MapPoint>> PointMapFromTrace(
    const sim::Trace& trace) {
  absl::StatusOr<sim::Scenario> scenario = ScenarioFromTrace(trace);
  if (!scenario.ok()) return scenario.status();
  std::vector<MapPoint> points;
  absl::StatusOr<sim::Trace> rerun =
      sim::RunScenario(*scenario, [&points](const sim::TickEvent& e) {
        if (e.cloud != nullptr) AppendSweep(*e.cloud, &points);
      });
  if (!rerun.ok()) return rerun.status();
  const sim::TraceComparison cmp = sim::CompareTraces(trace, *rerun);
  if (!cmp.match) {
    return absl::DataLossError("trace does not replay: " + cmp.detail);
  }
  return points;
}

absl::StatusOr<std::string> FieldSvg(const sim::Trace& trace, int64_t tick) {
  if (tick < 0 || trace.records.empty() || tick > trace.records.back().tick) {
    return absl::OutOfRangeError(absl::StrFormat(
        "tick %d is not in the trace (0..%d)", tick,
        trace.records.empty() ? -1 : trace.records.back().tick));
  }
  absl::StatusOr<sim::Scenario> scenario = ScenarioFromTrace(trace);
  if (!scenario.ok()) return scenario.status();
  absl::StatusOr<std::unique_ptr<sim::Simulation>> created =
      sim::Simulation::Create(*scenario);
  if (!created.ok()) return created.status();
  sim::Simulation& sim = **created;
  while (!sim.done() && sim.tick() <= tick) {
    if (absl::Status s = sim.Step(); !s.ok()) return s;
  }
  const sim::TraceRecord& record = sim.trace().records.at(tick);
  if (!(record == trace.records.at(tick))) {
    return absl::DataLossError(
        absl::StrFormat("trace does not replay at tick %d", tick));
  }
  const planning::CoverageStack& stack = sim.coverage();
  if (stack.entries.empty()) {
    return absl::FailedPreconditionError(
        absl::StrFormat("no path was being followed at tick %d", tick));
  }
  const geometry::PathFunction& path = stack.entries.back().path;
  const sim::World& world = scenario->world;
  const Point2 center = record.pose.position;
  const double half = scenario->sensor_max_range + 1.0;
  const double min_x = center.x - half;
  const double max_y = center.y + half;
  const double size = 2.0 * half;

  std::string svg = absl::StrFormat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%s %s %s %s\" "
      "width=\"800\" height=\"800\">\n",
      Num(min_x), Num(-max_y), Num(size), Num(size));
  svg += "<style>.wall{fill:none;stroke:#222;stroke-width:0.06}"
         ".obstacle{fill:#999;stroke:#222;stroke-width:0.04}"
         ".explored{fill:#cfe8cf;fill-rule:evenodd;stroke:none}"
         ".cluster{fill:none;stroke:#d22;stroke-width:0.06}"
         ".arrow{stroke:#357;stroke-width:0.025}"
         ".contour{fill:none;stroke:cyan;stroke-width:0.06}"
         ".robot{fill:#fa0;stroke:#222;stroke-width:0.03}</style>\n"
         "<defs><marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" "
         "refY=\"5\" markerWidth=\"4\" markerHeight=\"4\" "
         "orient=\"auto\"><path d=\"M0 0 L10 5 L0 10 Z\" "
         "fill=\"#357\"/></marker></defs>\n";
  svg += absl::StrFormat("<!-- tick %d time %s -->\n", tick,
                         FormatDouble(record.time));
  svg += "<g transform=\"scale(1,-1)\">\n";
  for (const planning::PolygonWithHoles& part : stack.explored.parts()) {
    std::string d = RingPath(part.outer);
    for (const auto& hole : part.holes) d += " " + RingPath(hole);
    svg += "<path class=\"explored\" d=\"" + d + "\"/>\n";
  }
  svg += "<polygon class=\"wall\" points=\"" + PointList(world.boundary) +
         "\"/>\n";
  for (const sim::Polygon& o : world.obstacles) {
    svg += "<polygon class=\"obstacle\" points=\"" + PointList(o) + "\"/>\n";
  }
  if (const auto& cloud = sim.last_cloud(); cloud.has_value()) {
    for (const auto& chain :
         planning::ClusterChains(*cloud, scenario->epsilon)) {
      std::vector<Point2> points;
      for (int i : chain) {
        points.push_back(
            geometry::BodyToWorld(cloud->pose, cloud->returns[i].point));
      }
      svg += "<polyline class=\"cluster\" points=\"" + PointList(points) +
             "\"/>\n";
    }
  }
  const int cells = static_cast<int>(std::floor(size / kArrowSpacing));
  for (int i = 0; i <= cells; ++i) {
    for (int j = 0; j <= cells; ++j) {
      const Point2 p{min_x + i * kArrowSpacing, max_y - j * kArrowSpacing};
      if (!InFreeSpace(world, p)) continue;
      const geometry::Vec2 g = geometry::GuidanceField(path, p);
      const double n = geometry::Norm(g);
      if (!(n > 0.0) || !std::isfinite(n)) continue;
      const Point2 tip = p + (kArrowLength / n) * g;
      svg += absl::StrFormat(
          "<line class=\"arrow\" x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" "
          "marker-end=\"url(#head)\"/>\n",
          Num(p.x), Num(p.y), Num(tip.x), Num(tip.y));
    }
  }
  std::vector<Point2> contour;
  for (double along = 0.0; along <= scenario->sensor_max_range + 1e-9;
       along += kContourStep) {
    contour.push_back(path.ToWorld({along, path.Spline(along)}));
  }
  svg += "<polyline class=\"contour\" points=\"" + PointList(contour) +
         "\"/>\n";
  svg += absl::StrFormat(
      "<circle class=\"robot\" cx=\"%s\" cy=\"%s\" r=\"%s\"/>\n",
      Num(center.x), Num(center.y), Num(scenario->robot_radius));
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace explore::cli
