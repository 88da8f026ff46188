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


#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "explore/common/random.h"
#include "explore/sim/robot.h"
#include "explore/sim/scenario.h"
#include "explore/sim/sensor.h"
#include "explore/sim/simulation.h"
#include "explore/sim/trace.h"
#include "explore/sim/world.h"
#include "gtest/gtest.h"
#include "support/oracles.h"

namespace explore::sim {
namespace {

using geometry::Point2;
using geometry::RobotPose;
using geometry::RobotState;

constexpr double kPi = std::numbers::pi;

World Room(double size) {
  return {"room", {{0, 0}, {size, 0}, {size, size}, {0, size}}, {}};
}

// ------------------------------------------------------------------- robot

TEST(StepRobotTest, ZeroCommandKeepsState) {
  RobotState s;
  s.pose = {{1, 2}, 0.3};
  s.tracker = {0.4, 0.1};
  const RobotState next = StepRobot(s, {0, 0}, 0.05, {});
  EXPECT_EQ(next.pose.position, s.pose.position);
  EXPECT_EQ(next.pose.heading, s.pose.heading);
  EXPECT_EQ(next.tracker, s.tracker);
}

TEST(StepRobotTest, StraightMotion) {
  RobotLimits limits;
  limits.v_max = 2.0;
  const RobotState next = StepRobot({}, {1.0, 0.0}, 1.0, limits);
  EXPECT_DOUBLE_EQ(next.pose.position.x, 1.0);
  EXPECT_DOUBLE_EQ(next.pose.position.y, 0.0);
}

TEST(StepRobotTest, TurnInPlace) {
  RobotLimits limits;
  limits.omega_max = 2.0;
  const RobotState next = StepRobot({}, {0.0, kPi / 2}, 1.0, limits);
  EXPECT_DOUBLE_EQ(next.pose.heading, kPi / 2);
  EXPECT_EQ(next.pose.position.x, 0.0);
  EXPECT_EQ(next.pose.position.y, 0.0);
}

TEST(StepRobotTest, MidpointHeadingAndClamping) {
  RobotLimits limits;  // v_max 0.5, omega_max 1
  const RobotState next = StepRobot({}, {5.0, 3.0}, 0.5, limits);
  EXPECT_DOUBLE_EQ(next.pose.heading, 0.5);
  EXPECT_NEAR(next.pose.position.x, 0.25 * std::cos(0.25), 1e-15);
  EXPECT_NEAR(next.pose.position.y, 0.25 * std::sin(0.25), 1e-15);
}

TEST(SteerFromTrackerTest, Examples) {
  RobotLimits limits;
  limits.k_heading = 2.0;
  RobotState s;
  s.tracker = {1, 0};
  VelocityCommand c = SteerFromTracker(s, limits);
  EXPECT_EQ(c.v, limits.v_max);
  EXPECT_EQ(c.omega, 0.0);

  s.tracker = {0, 1};
  c = SteerFromTracker(s, limits);
  EXPECT_NEAR(c.v, 0.0, 1e-15);
  EXPECT_EQ(c.omega, limits.omega_max);
  s.tracker = {0, -1};
  EXPECT_EQ(SteerFromTracker(s, limits).omega, -limits.omega_max);

  s.tracker = {1, 1};
  c = SteerFromTracker(s, limits);
  EXPECT_EQ(c.omega, 1.0);
  EXPECT_NEAR(c.v, limits.v_max * std::sqrt(2.0) / 2, 1e-15);

  s.tracker = {-1, 0.01};  // behind: never reverse
  EXPECT_EQ(SteerFromTracker(s, limits).v, 0.0);

  s.tracker = {0, 0};
  c = SteerFromTracker(s, limits);
  EXPECT_EQ(c.v, 0.0);
  EXPECT_EQ(c.omega, 0.0);
}

TEST(PoseProviderTest, GroundTruthAndZeroSigmaAreIdentity) {
  PoseProvider truth({});
  PoseProviderConfig odo;
  odo.kind = PoseProviderConfig::Kind::kNoisyOdometry;
  PoseProvider quiet(odo);
  for (int i = 0; i < 10; ++i) {
    const RobotPose p{{0.1 * i, -0.2 * i}, 0.05 * i};
    EXPECT_EQ(truth.Estimate(p).position, p.position);
    EXPECT_EQ(quiet.Estimate(p).position, p.position);
    EXPECT_EQ(quiet.Estimate(p).heading, p.heading);
  }
}

TEST(PoseProviderTest, SeededDriftIsReproducible) {
  PoseProviderConfig odo;
  odo.kind = PoseProviderConfig::Kind::kNoisyOdometry;
  odo.sigma_xy = 0.01;
  odo.sigma_heading = 0.002;
  odo.seed = 9;
  PoseProvider a(odo), b(odo);
  bool drifted = false;
  for (int i = 0; i < 50; ++i) {
    const RobotPose p{{0.1 * i, 0}, 0};
    const RobotPose ea = a.Estimate(p), eb = b.Estimate(p);
    EXPECT_EQ(ea.position, eb.position);
    EXPECT_EQ(ea.heading, eb.heading);
    drifted |= ea.position.y != 0.0;
  }
  EXPECT_TRUE(drifted);
}

// ------------------------------------------------------------------- world

TEST(CollisionCheckTest, Examples) {
  World w = Room(10);
  w.obstacles.push_back({{6, 4}, {8, 4}, {8, 6}, {6, 6}});
  ASSERT_TRUE(ValidateWorld(w).ok());
  EXPECT_FALSE(CollisionCheck(w, {{3, 3}, 0}, 0.5));
  EXPECT_TRUE(CollisionCheck(w, {{7, 5}, 0}, 0.5));
  // 1 mm clear of the obstacle's left edge.
  const Point2 near{6.0 - 0.5 - 0.001, 5.0};
  EXPECT_NEAR(oracle::SegmentDistance(near, {6, 4}, {6, 6}), 0.501, 1e-12);
  EXPECT_FALSE(CollisionCheck(w, {near, 0}, 0.5));
  EXPECT_TRUE(CollisionCheck(w, {{6.0 - 0.499, 5.0}, 0}, 0.5));
  // Leaving the boundary.
  EXPECT_TRUE(CollisionCheck(w, {{0.3, 5}, 0}, 0.5));
}

TEST(ValidateWorldTest, RejectsBadGeometry) {
  World w = Room(10);
  w.obstacles.push_back({{9, 9}, {12, 9}, {12, 12}, {9, 12}});  // pokes out
  EXPECT_FALSE(ValidateWorld(w).ok());
  World bowtie{"x", {{0, 0}, {1, 1}, {1, 0}, {0, 1}}, {}};
  EXPECT_FALSE(ValidateWorld(bowtie).ok());
  World overlap = Room(10);
  overlap.obstacles = {{{1, 1}, {3, 1}, {3, 3}, {1, 3}},
                       {{2, 2}, {4, 2}, {4, 4}, {2, 4}}};
  EXPECT_FALSE(ValidateWorld(overlap).ok());
}

TEST(FreeSpaceTest, AreaExcludesObstacles) {
  World w = Room(10);
  w.obstacles.push_back({{6, 4}, {8, 4}, {8, 6}, {6, 6}});
  EXPECT_NEAR(FreeSpace(w).Area(), 96.0, 1e-9);
}

// ------------------------------------------------------------------ sensor

TEST(RangeSensorTest, EmptyWorldAllFree) {
  SensorConfig config;
  RangeSensor sensor(config);
  const World w = Room(100);
  const RobotPose pose{{50, 50}, 0.7};
  auto cloud = sensor.Sense(w, pose, pose, 0.0);
  ASSERT_TRUE(cloud.ok());
  ASSERT_EQ(cloud->returns.size(), 96u);
  for (const auto& r : cloud->returns) {
    EXPECT_TRUE(r.free);
    EXPECT_EQ(r.range, config.max_range);
  }
  EXPECT_DOUBLE_EQ(cloud->returns.front().bearing, -config.half_angle);
  EXPECT_DOUBLE_EQ(cloud->returns.back().bearing, config.half_angle);
}

TEST(RangeSensorTest, WallAheadAtTwoMeters) {
  SensorConfig config;
  config.rays = 97;
  RangeSensor sensor(config);
  const World w = Room(10);
  const RobotPose pose{{8, 5}, 0};
  auto cloud = sensor.Sense(w, pose, pose, 0.0);
  ASSERT_TRUE(cloud.ok());
  EXPECT_DOUBLE_EQ(cloud->returns[48].range, 2.0);
  EXPECT_FALSE(cloud->returns[48].free);
  // Off-center rays hit the same wall at 2 / cos(bearing).
  const auto& r = cloud->returns[60];
  EXPECT_NEAR(r.range, 2.0 / std::cos(r.bearing), 1e-12);
}

TEST(RangeSensorTest, NoiseIsSeeded) {
  SensorConfig config;
  config.range_noise_sigma = 0.01;
  config.seed = 17;
  const World w = Room(10);
  const RobotPose pose{{8, 5}, 0};
  RangeSensor a(config), b(config);
  auto ca = a.Sense(w, pose, pose, 0.0);
  auto cb = b.Sense(w, pose, pose, 0.0);
  ASSERT_TRUE(ca.ok() && cb.ok());
  bool noisy = false;
  for (size_t i = 0; i < ca->returns.size(); ++i) {
    EXPECT_EQ(ca->returns[i].range, cb->returns[i].range);
    noisy |= std::abs(ca->returns[i].range -
                      2.0 / std::cos(ca->returns[i].bearing)) > 1e-9;
  }
  EXPECT_TRUE(noisy);
}

TEST(RangeSensorTest, RejectsPoseOutsideBoundary) {
  RangeSensor sensor({});
  const RobotPose pose{{20, 5}, 0};
  EXPECT_FALSE(sensor.Sense(Room(10), pose, pose, 0.0).ok());
}

// ---------------------------------------------------------------- scenario

constexpr char kRoomScenario[] = R"(
[world]
name = room
boundary = 0,0 10,0 10,10 0,10
[robot]
start = 1,1
heading_deg = 0
[run]
duration = 60
)";

TEST(ScenarioTest, SerializeRoundTrips) {
  for (const std::string& name : BuiltinScenarioNames()) {
    auto text = BuiltinScenarioText(name);
    ASSERT_TRUE(text.has_value());
    auto parsed = ParseScenario(*text);
    ASSERT_TRUE(parsed.ok()) << name << ": " << parsed.status();
    const std::string canonical = SerializeScenario(*parsed);
    auto again = ParseScenario(canonical);
    ASSERT_TRUE(again.ok()) << again.status();
    EXPECT_EQ(SerializeScenario(*again), canonical);
  }
}

TEST(ScenarioTest, ParseErrorsNameTheLine) {
  const std::string bad = "[world]\nname = x\nboundary = 0,0 1,0 oops\n";
  auto parsed = ParseScenario(bad);
  ASSERT_FALSE(parsed.ok());
  EXPECT_NE(std::string(parsed.status().message()).find("line 3"),
            std::string::npos)
      << parsed.status();
  EXPECT_FALSE(ParseScenario("[nosuch]\n").ok());
  EXPECT_FALSE(ParseScenario("[run]\nduration = -5\n").ok());
}

TEST(ScenarioTest, RejectsPlanningFasterThanControl) {
  auto s = ParseScenario(kRoomScenario);
  ASSERT_TRUE(s.ok());
  s->rates.plan_hz = 40;
  EXPECT_FALSE(ValidateScenario(*s).ok());
  s->rates.plan_hz = 0;
  EXPECT_FALSE(ValidateScenario(*s).ok());
}

TEST(ScenarioTest, BuiltinsAreListed) {
  const std::vector<std::string> names = BuiltinScenarioNames();
  for (const char* expected :
       {"open-field", "hallway-circuit", "tunnel-open", "sealed-corridor"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end());
  }
}

// ------------------------------------------------------------------- trace

TEST(TraceTest, FormatParseRoundTrip) {
  auto s = ParseScenario(kRoomScenario);
  ASSERT_TRUE(s.ok());
  s->duration = 5;
  auto trace = RunScenario(*s);
  ASSERT_TRUE(trace.ok());
  const std::string text = FormatTrace(*trace);
  auto parsed = ParseTrace(text);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_TRUE(CompareTraces(*trace, *parsed).match);
  EXPECT_EQ(FormatTrace(*parsed), text);
}

TEST(TraceTest, EditedPoseIsReportedAtItsTick) {
  auto s = ParseScenario(kRoomScenario);
  ASSERT_TRUE(s.ok());
  s->duration = 5;
  auto trace = RunScenario(*s);
  ASSERT_TRUE(trace.ok());
  Trace edited = *trace;
  edited.records[37].pose.position.x += 1e-12;
  const TraceComparison cmp = CompareTraces(*trace, edited);
  EXPECT_FALSE(cmp.match);
  ASSERT_TRUE(cmp.first_divergent_tick.has_value());
  EXPECT_EQ(*cmp.first_divergent_tick, 37);
}

TEST(TraceTest, RejectsGarbage) {
  EXPECT_FALSE(ParseTrace("").ok());
  EXPECT_FALSE(ParseTrace("# explore-trace/999\n").ok());
}

TEST(TraceTest, ConfigHashIsStable) {
  EXPECT_EQ(ConfigHash("abc"), ConfigHash("abc"));
  EXPECT_NE(ConfigHash("abc"), ConfigHash("abd"));
}

// -------------------------------------------------------------- simulation

// The planner never returns to old frontiers and its candidates always reach
// the full sensor range, so a room smaller than that range is not explored
// to completion; what must hold is that the run stays collision-free and
// ends on its own terms.
TEST(RunScenarioTest, EmptyRoomIsCollisionFree) {
  auto s = ParseScenario(kRoomScenario);
  ASSERT_TRUE(s.ok());
  s->limits.k_heading = 20;
  s->tracker_cap = 0.1;
  for (const Point2 start : {Point2{1, 1}, Point2{5, 5}, Point2{1, 5}}) {
    s->start = start;
    auto trace = RunScenario(*s);
    ASSERT_TRUE(trace.ok());
    ASSERT_TRUE(trace->outcome.has_value());
    EXPECT_NE(*trace->outcome, Outcome::kCollision);
    for (const TraceRecord& r : trace->records) ASSERT_FALSE(r.collision);
    for (size_t i = 1; i < trace->records.size(); ++i) {
      ASSERT_GT(trace->records[i].time, trace->records[i - 1].time);
    }
  }
}

TEST(RunScenarioTest, OpenFieldCompletes) {
  auto s = ParseScenario(*BuiltinScenarioText("open-field"));
  ASSERT_TRUE(s.ok());
  auto trace = RunScenario(*s);
  ASSERT_TRUE(trace.ok());
  EXPECT_EQ(trace->outcome, Outcome::kComplete);
}

TEST(RunScenarioTest, SealedCorridorIsStuck) {
  auto s = ParseScenario(*BuiltinScenarioText("sealed-corridor"));
  ASSERT_TRUE(s.ok());
  auto trace = RunScenario(*s);
  ASSERT_TRUE(trace.ok());
  EXPECT_EQ(trace->outcome, Outcome::kStuck);
  EXPECT_EQ(trace->records.back().decision, "stuck");
}

TEST(RunScenarioTest, IdenticalInputsGiveIdenticalTraces) {
  auto s = ParseScenario(*BuiltinScenarioText("tunnel-open"));
  ASSERT_TRUE(s.ok());
  s->duration = 40;
  auto a = RunScenario(*s);
  auto b = RunScenario(*s);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(FormatTrace(*a), FormatTrace(*b));
}

TEST(RunScenarioTest, CollisionEndsTheRunWithFlag) {
  auto s = ParseScenario(kRoomScenario);
  ASSERT_TRUE(s.ok());
  // Start touching the wall.
  s->start = {0.4, 5};
  auto trace = RunScenario(*s);
  ASSERT_TRUE(trace.ok());
  EXPECT_EQ(trace->outcome, Outcome::kCollision);
  EXPECT_TRUE(trace->records.back().collision);
}

TEST(RunScenarioTest, GoalTerminatorCompletes) {
  auto s = ParseScenario(*BuiltinScenarioText("open-field"));
  ASSERT_TRUE(s.ok());
  s->goal = Point2{20, 0};
  s->coverage_threshold = 1.0;
  auto sim = Simulation::Create(*s);
  ASSERT_TRUE(sim.ok());
  ASSERT_TRUE((*sim)->Run().ok());
  EXPECT_EQ((*sim)->outcome(), Outcome::kComplete);
  EXPECT_LT(std::abs((*sim)->state().pose.position.x - 20.0), 1.0 + 0.05);
}

}  // namespace
}  // namespace explore::sim
