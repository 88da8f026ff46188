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

#include "explore/sim/scenario.h"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "explore/common/number_format.h"
#include "explore/common/text.h"

namespace explore::sim {
namespace {

using geometry::Point2;

constexpr double kDegToRad = std::numbers::pi / 180.0;

absl::Status LineError(int line, std::string_view message) {
  return absl::InvalidArgumentError(
      absl::StrFormat("line %d: %s", line, std::string(message)));
}

std::string Quoted(std::string_view text) {
  return "'" + std::string(text) + "'";
}

absl::StatusOr<Point2> ParsePoint(std::string_view text) {
  const std::vector<std::string_view> xy = Split(text, ',');
  if (xy.size() != 2) {
    return absl::InvalidArgumentError("expected x,y but got " + Quoted(text));
  }
  const std::optional<double> x = ParseDouble(Trim(xy[0]));
  const std::optional<double> y = ParseDouble(Trim(xy[1]));
  if (!x || !y || !std::isfinite(*x) || !std::isfinite(*y)) {
    return absl::InvalidArgumentError("bad coordinate pair " + Quoted(text));
  }
  return Point2{*x, *y};
}

absl::StatusOr<Polygon> ParsePolygon(std::string_view text) {
  Polygon polygon;
  for (std::string_view token : SplitWhitespace(text)) {
    absl::StatusOr<Point2> p = ParsePoint(token);
    if (!p.ok()) return p.status();
    polygon.push_back(*p);
  }
  return polygon;
}

std::string FormatPoint(Point2 p) {
  return FormatDouble(p.x) + "," + FormatDouble(p.y);
}

std::string FormatPolygon(const Polygon& polygon) {
  std::string out;
  for (const Point2& p : polygon) {
    if (!out.empty()) out += ' ';
    out += FormatPoint(p);
  }
  return out;
}

// Typed setters for one section's keys.
class KeyTable {
 public:
  using Setter = std::function<absl::Status(std::string_view)>;

  void Add(std::string key, Setter setter) {
    setters_.emplace(std::move(key), std::move(setter));
  }
  void Double(std::string key, double* target) {
    Add(std::move(key), [target](std::string_view v) -> absl::Status {
      const std::optional<double> d = ParseDouble(v);
      if (!d || !std::isfinite(*d)) {
        return absl::InvalidArgumentError("expected a number, got " +
                                          Quoted(v));
      }
      *target = *d;
      return absl::OkStatus();
    });
  }
  template <typename Int>
  void Integer(std::string key, Int* target) {
    Add(std::move(key), [target](std::string_view v) -> absl::Status {
      const std::optional<long long> i = ParseInt(v);
      if (!i) {
        return absl::InvalidArgumentError("expected an integer, got " +
                                          Quoted(v));
      }
      *target = static_cast<Int>(*i);
      return absl::OkStatus();
    });
  }
  const Setter* Find(const std::string& key) const {
    auto it = setters_.find(key);
    return it == setters_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, Setter> setters_;
};

std::map<std::string, KeyTable> BuildTables(Scenario& s) {
  std::map<std::string, KeyTable> tables;

  KeyTable& world = tables["world"];
  world.Add("name", [&s](std::string_view v) {
    s.world.name = std::string(v);
    return absl::OkStatus();
  });
  world.Add("boundary", [&s](std::string_view v) -> absl::Status {
    absl::StatusOr<Polygon> p = ParsePolygon(v);
    if (!p.ok()) return p.status();
    s.world.boundary = *std::move(p);
    return absl::OkStatus();
  });
  world.Add("obstacle", [&s](std::string_view v) -> absl::Status {
    absl::StatusOr<Polygon> p = ParsePolygon(v);
    if (!p.ok()) return p.status();
    s.world.obstacles.push_back(*std::move(p));
    return absl::OkStatus();
  });

  KeyTable& sensor = tables["sensor"];
  sensor.Double("half_angle_deg", &s.sensor_half_angle_deg);
  sensor.Double("max_range", &s.sensor_max_range);
  sensor.Integer("rays", &s.sensor_rays);
  sensor.Double("noise_sigma", &s.sensor_noise_sigma);
  sensor.Integer("seed", &s.sensor_seed);

  KeyTable& planner = tables["planner"];
  planner.Double("epsilon", &s.epsilon);
  planner.Integer("fan_size", &s.fan_size);
  planner.Double("step_size", &s.step_size);
  planner.Double("tracker_cap", &s.tracker_cap);
  planner.Double("coverage_threshold", &s.coverage_threshold);
  planner.Integer("arc_chords", &s.arc_chords);
  planner.Double("inflation_radius", &s.inflation_radius);
  planner.Double("vertex_tolerance", &s.vertex_tolerance);
  planner.Double("sample_step", &s.sample_step);
  planner.Double("attraction_rate", &s.attraction_rate);
  planner.Add("goal", [&s](std::string_view v) -> absl::Status {
    absl::StatusOr<Point2> p = ParsePoint(v);
    if (!p.ok()) return p.status();
    s.goal = *p;
    return absl::OkStatus();
  });
  planner.Double("goal_radius", &s.goal_radius);

  KeyTable& robot = tables["robot"];
  robot.Add("start", [&s](std::string_view v) -> absl::Status {
    absl::StatusOr<Point2> p = ParsePoint(v);
    if (!p.ok()) return p.status();
    s.start = *p;
    return absl::OkStatus();
  });
  robot.Double("heading_deg", &s.start_heading_deg);
  robot.Double("v_max", &s.limits.v_max);
  robot.Double("omega_max", &s.limits.omega_max);
  robot.Double("k_heading", &s.limits.k_heading);
  robot.Double("radius", &s.robot_radius);
  robot.Add("pose_provider", [&s](std::string_view v) -> absl::Status {
    if (v == "ground_truth") {
      s.pose_provider.kind = PoseProviderConfig::Kind::kGroundTruth;
    } else if (v == "noisy_odometry") {
      s.pose_provider.kind = PoseProviderConfig::Kind::kNoisyOdometry;
    } else {
      return absl::InvalidArgumentError("unknown pose provider " + Quoted(v));
    }
    return absl::OkStatus();
  });
  robot.Double("odometry_sigma_xy", &s.pose_provider.sigma_xy);
  robot.Double("odometry_sigma_heading", &s.pose_provider.sigma_heading);
  robot.Integer("odometry_seed", &s.pose_provider.seed);

  KeyTable& rates = tables["rates"];
  rates.Double("sense_hz", &s.rates.sense_hz);
  rates.Double("plan_hz", &s.rates.plan_hz);
  rates.Double("control_hz", &s.rates.control_hz);

  KeyTable& run = tables["run"];
  run.Double("duration", &s.duration);
  run.Add("expect", [&s](std::string_view v) -> absl::Status {
    if (v == "none") {
      s.expect.reset();
      return absl::OkStatus();
    }
    const std::optional<Outcome> o = ParseOutcome(v);
    if (!o) {
      return absl::InvalidArgumentError("unknown outcome " + Quoted(v));
    }
    s.expect = *o;
    return absl::OkStatus();
  });
  return tables;
}

}  // namespace

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kComplete:
      return "complete";
    case Outcome::kStuck:
      return "stuck";
    case Outcome::kCollision:
      return "collision";
    case Outcome::kTimeout:
      return "timeout";
  }
  return "unknown";
}

std::optional<Outcome> ParseOutcome(std::string_view name) {
  for (Outcome o : {Outcome::kComplete, Outcome::kStuck, Outcome::kCollision,
                    Outcome::kTimeout}) {
    if (OutcomeName(o) == name) return o;
  }
  return std::nullopt;
}

absl::StatusOr<Scenario> ParseScenario(std::string_view text) {
  Scenario scenario;
  std::map<std::string, KeyTable> tables = BuildTables(scenario);
  const KeyTable* section = nullptr;
  std::string section_name;
  std::set<std::string> seen;
  int line_number = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_number;
    std::string_view line = raw;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') return LineError(line_number, "unclosed section");
      section_name = std::string(line.substr(1, line.size() - 2));
      auto it = tables.find(section_name);
      if (it == tables.end()) {
        return LineError(line_number,
                         "unknown section [" + section_name + "]");
      }
      section = &it->second;
      continue;
    }
    if (section == nullptr) {
      return LineError(line_number, "key outside of any section");
    }
    const size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      return LineError(line_number, "expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    const std::string_view value = Trim(line.substr(eq + 1));
    const KeyTable::Setter* setter = section->Find(key);
    if (setter == nullptr) {
      return LineError(line_number, "unknown key " + Quoted(key) + " in [" +
                                        section_name + "]");
    }
    const std::string qualified = section_name + "." + key;
    if (key != "obstacle" && !seen.insert(qualified).second) {
      return LineError(line_number, "duplicate key " + Quoted(key));
    }
    if (absl::Status s = (*setter)(value); !s.ok()) {
      return LineError(line_number, std::string(s.message()));
    }
  }
  if (absl::Status s = ValidateScenario(scenario); !s.ok()) return s;
  return scenario;
}

absl::Status ValidateScenario(const Scenario& s) {
  auto fail = [](std::string_view what) {
    return absl::InvalidArgumentError("invalid scenario: " + std::string(what));
  };
  if (s.world.name.empty()) return fail("world name is empty");
  if (!(s.sensor_half_angle_deg > 0.0 && s.sensor_half_angle_deg < 90.0)) {
    return fail("sensor half angle must be in (0, 90) degrees");
  }
  if (!(s.sensor_max_range > 0.0)) return fail("sensor max range must be > 0");
  if (s.sensor_rays < 2) return fail("sensor needs at least 2 rays");
  if (!(s.sensor_noise_sigma >= 0.0)) return fail("noise sigma must be >= 0");
  if (!(s.epsilon > 0.0)) return fail("epsilon must be > 0");
  if (s.fan_size < 3 || s.fan_size % 2 == 0) {
    return fail("fan size must be odd and >= 3");
  }
  if (!(s.step_size > 0.0)) return fail("step size must be > 0");
  if (!(s.tracker_cap > 0.0)) return fail("tracker cap must be > 0");
  if (!(s.coverage_threshold > 0.0 && s.coverage_threshold <= 1.0)) {
    return fail("coverage threshold must be in (0, 1]");
  }
  if (s.arc_chords < 1) return fail("arc chords must be >= 1");
  if (!(s.inflation_radius >= 0.0)) return fail("inflation radius must be >= 0");
  if (!(s.sample_step > 0.0)) return fail("sample step must be > 0");
  if (!(s.attraction_rate >= 0.0)) return fail("attraction rate must be >= 0");
  if (!(s.goal_radius > 0.0)) return fail("goal radius must be > 0");
  if (!(s.limits.v_max > 0.0 && s.limits.omega_max > 0.0 &&
        s.limits.k_heading > 0.0)) {
    return fail("robot limits must be > 0");
  }
  if (!(s.robot_radius > 0.0)) return fail("robot radius must be > 0");
  if (!(s.pose_provider.sigma_xy >= 0.0 && s.pose_provider.sigma_heading >= 0.0)) {
    return fail("odometry sigmas must be >= 0");
  }
  const Rates& r = s.rates;
  if (!(r.sense_hz > 0.0 && r.plan_hz > 0.0 && r.control_hz > 0.0)) {
    return fail("rates must be > 0");
  }
  if (r.control_hz < r.plan_hz || r.control_hz < r.sense_hz) {
    return fail("control rate must be at least the plan and sense rates");
  }
  if (!(s.duration > 0.0)) return fail("duration must be > 0");
  if (absl::Status w = ValidateWorld(s.world); !w.ok()) {
    return fail(std::string(w.message()));
  }
  if (!PointInPolygon(s.world.boundary, s.start)) {
    return fail("start is outside the boundary");
  }
  return absl::OkStatus();
}

std::string SerializeScenario(const Scenario& s) {
  std::string out;
  auto kv = [&out](std::string_view key, std::string_view value) {
    out.append(key).append(" = ").append(value).append("\n");
  };
  auto num = [&kv](std::string_view key, double value) {
    kv(key, FormatDouble(value));
  };
  out += "[world]\n";
  kv("name", s.world.name);
  kv("boundary", FormatPolygon(s.world.boundary));
  for (const Polygon& o : s.world.obstacles) kv("obstacle", FormatPolygon(o));
  out += "[sensor]\n";
  num("half_angle_deg", s.sensor_half_angle_deg);
  num("max_range", s.sensor_max_range);
  kv("rays", std::to_string(s.sensor_rays));
  num("noise_sigma", s.sensor_noise_sigma);
  kv("seed", std::to_string(s.sensor_seed));
  out += "[planner]\n";
  num("epsilon", s.epsilon);
  kv("fan_size", std::to_string(s.fan_size));
  num("step_size", s.step_size);
  num("tracker_cap", s.tracker_cap);
  num("coverage_threshold", s.coverage_threshold);
  kv("arc_chords", std::to_string(s.arc_chords));
  num("inflation_radius", s.inflation_radius);
  num("vertex_tolerance", s.vertex_tolerance);
  num("sample_step", s.sample_step);
  num("attraction_rate", s.attraction_rate);
  if (s.goal) kv("goal", FormatPoint(*s.goal));
  num("goal_radius", s.goal_radius);
  out += "[robot]\n";
  kv("start", FormatPoint(s.start));
  num("heading_deg", s.start_heading_deg);
  num("v_max", s.limits.v_max);
  num("omega_max", s.limits.omega_max);
  num("k_heading", s.limits.k_heading);
  num("radius", s.robot_radius);
  kv("pose_provider", s.pose_provider.kind ==
                              PoseProviderConfig::Kind::kGroundTruth
                          ? "ground_truth"
                          : "noisy_odometry");
  num("odometry_sigma_xy", s.pose_provider.sigma_xy);
  num("odometry_sigma_heading", s.pose_provider.sigma_heading);
  kv("odometry_seed", std::to_string(s.pose_provider.seed));
  out += "[rates]\n";
  num("sense_hz", s.rates.sense_hz);
  num("plan_hz", s.rates.plan_hz);
  num("control_hz", s.rates.control_hz);
  out += "[run]\n";
  num("duration", s.duration);
  kv("expect", s.expect ? OutcomeName(*s.expect) : "none");
  return out;
}

SensorConfig MakeSensorConfig(const Scenario& s) {
  return {.half_angle = s.sensor_half_angle_deg * kDegToRad,
          .max_range = s.sensor_max_range,
          .rays = s.sensor_rays,
          .range_noise_sigma = s.sensor_noise_sigma,
          .seed = s.sensor_seed};
}

planning::PlannerConfig MakePlannerConfig(const Scenario& s) {
  planning::PlannerConfig c;
  c.epsilon = s.epsilon;
  c.fov = {.half_angle = s.sensor_half_angle_deg * kDegToRad,
           .max_range = s.sensor_max_range};
  c.fan_size = s.fan_size;
  c.step_size = s.step_size;
  c.tracker_cap = s.tracker_cap;
  c.coverage_threshold = s.coverage_threshold;
  c.arc_chords = s.arc_chords;
  c.inflation_radius = s.inflation_radius;
  c.vertex_tolerance = s.vertex_tolerance;
  c.sample_step = s.sample_step;
  c.fixed_attraction_rate = s.attraction_rate;
  c.free_space = FreeSpace(s.world);
  c.goal = s.goal;
  c.goal_radius = s.goal_radius;
  return c;
}

geometry::RobotPose StartPose(const Scenario& s) {
  return {s.start, geometry::WrapAngle(s.start_heading_deg * kDegToRad)};
}

}  // namespace explore::sim
