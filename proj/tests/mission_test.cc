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


#include <memory>
#include <set>
#include <string>

#include "explore/sim/scenario.h"
#include "explore/station/mission.h"
#include "gtest/gtest.h"

namespace explore::station {
namespace {

std::unique_ptr<HeadlessMission> TunnelMission() {
  auto text = sim::BuiltinScenarioText("tunnel-open");
  EXPECT_TRUE(text.has_value());
  auto scenario = sim::ParseScenario(std::string(*text));
  EXPECT_TRUE(scenario.ok()) << scenario.status();
  auto mission = HeadlessMission::Create(*scenario, MissionConfig{});
  EXPECT_TRUE(mission.ok()) << mission.status();
  return *std::move(mission);
}

void RunFor(HeadlessMission& m, double seconds) {
  const double end = m.time() + seconds;
  while (!m.done() && m.time() < end) ASSERT_TRUE(m.Step().ok());
}

void RunUntilStuck(HeadlessMission& m) {
  while (!m.done() && !m.station().robot().stuck && m.time() < 300) {
    ASSERT_TRUE(m.Step().ok());
  }
}

std::optional<double> FirstEventTime(const Station& s, const std::string& type) {
  for (const Event& e : s.EventsAfter(0)) {
    if (e.type == type) return e.time;
  }
  return std::nullopt;
}

TEST(MissionTest, StuckAlertWithinLatencyPlusTwoTicks) {
  auto m = TunnelMission();
  RunUntilStuck(*m);
  ASSERT_TRUE(m->station().robot().stuck);
  ASSERT_TRUE(m->first_stuck_sent().has_value());
  const std::optional<double> alert = FirstEventTime(m->station(), "stuck");
  ASSERT_TRUE(alert.has_value());
  const double latency = link::LinkConfig{}.latency;
  const double tick = 1.0 / m->simulation().scenario().rates.control_hz;
  EXPECT_GE(*alert, *m->first_stuck_sent());
  EXPECT_LE(*alert - *m->first_stuck_sent(), latency + 2 * tick + 1e-9);
  EXPECT_NEAR(m->station().robot().pose->position.x, 50.0, 5.0);
}

TEST(MissionTest, OperatorInterventionAndHandBack) {
  auto m = TunnelMission();
  RunUntilStuck(*m);
  ASSERT_TRUE(m->station().robot().stuck);

  ASSERT_TRUE(m->station()
                  .Submit("op", OperatorCommand::Goto(55, 0), m->time())
                  .accepted());
  RunFor(*m, 30);
  ASSERT_TRUE(m->station()
                  .Submit("op", OperatorCommand::Goto(62, 0), m->time())
                  .accepted());
  RunFor(*m, 20);
  ASSERT_TRUE(m->station()
                  .Submit("op", OperatorCommand::Drive(1, 0), m->time())
                  .accepted());
  RunFor(*m, 4);
  // The operator moved the robot through the doorway into the tunnel.
  EXPECT_GT(m->simulation().state().pose.position.x, 60.0);
  for (const sim::TraceRecord& r : m->simulation().trace().records) {
    ASSERT_FALSE(r.collision) << "collision at t=" << r.time;
  }
  EXPECT_EQ(m->station().robot().decision, "teleop");

  const uint64_t before = m->station().last_event_id();
  const double resumed_at = m->time();
  ASSERT_TRUE(m->station()
                  .Submit("op", OperatorCommand::Resume(), resumed_at)
                  .accepted());
  EXPECT_FALSE(m->station().driver().has_value());
  RunFor(*m, 10);

  // The planner takes over within one plan tick of the frame's arrival.
  const sim::Scenario& sc = m->simulation().scenario();
  const double arrival = resumed_at + link::LinkConfig{}.latency +
                         6 * 8 / link::LinkConfig{}.data_rate;
  double handback = -1;
  for (const sim::TraceRecord& r : m->simulation().trace().records) {
    if (r.time > resumed_at && r.decision != "teleop") {
      handback = r.time;
      break;
    }
  }
  ASSERT_GT(handback, 0);
  EXPECT_LE(handback, arrival + 1.0 / sc.rates.plan_hz +
                          1.0 / sc.rates.control_hz + 1e-9);

  // The station sees the teleop flag cleared by a planner decision.
  const std::set<std::string> planner = {"track", "continue", "new_path",
                                         "stuck", "complete"};
  bool handed_back = false;
  for (const Event& e : m->station().EventsAfter(before)) {
    if (e.type == "decision" && e.data["from"] == "teleop") {
      EXPECT_TRUE(planner.count(e.data["to"].get<std::string>()))
          << e.data.dump();
      handed_back = true;
    }
  }
  EXPECT_TRUE(handed_back);
  EXPECT_NE(m->station().robot().decision, "teleop");
}

TEST(MissionTest, TelemetryAndAcksFlow) {
  auto m = TunnelMission();
  ASSERT_TRUE(m->AdvanceTo(20.0).ok());
  EXPECT_GE(m->station().frames_received(), 9u);
  EXPECT_EQ(m->station().frames_rejected(), 0u);
  EXPECT_GT(m->station().robot().coverage, 0.0);
  EXPECT_FALSE(m->station().robot().explored.empty());
  ASSERT_TRUE(
      m->station().Submit("op", OperatorCommand::Stop(), m->time()).accepted());
  ASSERT_TRUE(m->AdvanceTo(22.0).ok());
  bool acked = false;
  for (const Event& e : m->station().EventsAfter(0)) {
    if (e.type == "ack" && e.data["acked_seq"] == 0) acked = true;
  }
  EXPECT_TRUE(acked);
}

TEST(MissionTest, IsDeterministic) {
  auto a = TunnelMission();
  auto b = TunnelMission();
  ASSERT_TRUE(a->AdvanceTo(40.0).ok());
  ASSERT_TRUE(b->AdvanceTo(40.0).ok());
  EXPECT_EQ(a->simulation().trace().records, b->simulation().trace().records);
  EXPECT_EQ(a->station().Snapshot(), b->station().Snapshot());
}

}  // namespace
}  // namespace explore::station
