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

#ifndef EXPLORE_SIM_SIMULATION_H_
#define EXPLORE_SIM_SIMULATION_H_

#include <functional>
#include <memory>
#include <optional>

#include "absl/status/statusor.h"
#include "explore/geometry/robot_state.h"
#include "explore/geometry/vec2.h"
#include "explore/planning/coverage.h"
#include "explore/planning/planner.h"
#include "explore/planning/point_cloud.h"
#include "explore/sim/robot.h"
#include "explore/sim/scenario.h"
#include "explore/sim/sensor.h"
#include "explore/sim/trace.h"

namespace explore::sim {

// What happened in one control tick, for observers that need more than the
// trace line (exports, the base station, tests).
struct TickEvent {
  const TraceRecord& record;
  const geometry::RobotState& state;     // true state at the start of the tick
  const geometry::RobotPose& estimate;   // pose the planner believed in
  const planning::PointCloud* cloud;     // set on sensing ticks
  const planning::PlannerOutput* plan;   // set on planning ticks
  const planning::CoverageStack& coverage;
};

using TickObserver = std::function<void(const TickEvent&)>;

// Fixed-step closed loop: sensing, planning and control run at their own
// rates on a common control clock. A run ends on complete, stuck (unless
// supervised), collision, or when the duration elapses.
class Simulation {
 public:
  static absl::StatusOr<std::unique_ptr<Simulation>> Create(
      const Scenario& scenario);

  // Advances one control tick. Fails only on internal errors; outcomes are
  // reported through outcome().
  absl::Status Step();
  // Steps until the run ends.
  absl::Status Run();

  bool done() const { return trace_.outcome.has_value(); }
  std::optional<Outcome> outcome() const { return trace_.outcome; }
  double time() const { return tick_ * dt_; }
  int64_t tick() const { return tick_; }
  double dt() const { return dt_; }

  const Trace& trace() const { return trace_; }
  const Scenario& scenario() const { return scenario_; }
  const World& world() const { return scenario_.world; }
  const geometry::RobotState& state() const { return state_; }
  const geometry::RobotPose& estimate() const { return estimate_; }
  const planning::CoverageStack& coverage() const { return stack_; }
  const planning::PlannerConfig& planner_config() const { return planner_; }
  const std::optional<planning::PointCloud>& last_cloud() const {
    return cloud_;
  }
  std::optional<planning::Decision> last_decision() const {
    return last_decision_;
  }
  double distance_traveled() const { return distance_; }

  void set_observer(TickObserver observer) { observer_ = std::move(observer); }

  // Supervision hooks. A supervised run keeps going while stuck so that an
  // operator can intervene.
  void set_supervised(bool supervised) { supervised_ = supervised; }
  // Steers along `tracker` (world frame) instead of the planner until
  // ResumeAutonomy. The planner is paused meanwhile.
  void SetTeleopTracker(geometry::Vec2 tracker);
  // Drives toward `target` under teleop; stops within `tolerance`.
  void SetTeleopGoal(geometry::Point2 target, double tolerance = 0.2);
  // Hands control back; the next planning tick treats the scene as new.
  void ResumeAutonomy();
  bool teleop_active() const { return teleop_.has_value(); }

 private:
  struct Teleop {
    geometry::Vec2 tracker;
    std::optional<geometry::Point2> goal;
    double tolerance = 0.2;
  };

  Simulation(const Scenario& scenario, World world);
  bool Due(double rate_hz) const;
  void Finish(Outcome outcome) { trace_.outcome = outcome; }

  Scenario scenario_;
  planning::PlannerConfig planner_;
  RangeSensor sensor_;
  PoseProvider pose_provider_;
  double dt_;
  int64_t tick_ = 0;
  geometry::RobotState state_;
  geometry::RobotPose estimate_;
  planning::CoverageStack stack_;
  std::optional<planning::PointCloud> cloud_;
  std::optional<planning::Decision> last_decision_;
  std::optional<Teleop> teleop_;
  bool supervised_ = false;
  double distance_ = 0.0;
  Trace trace_;
  TickObserver observer_;
};

// Runs a scenario to the end and returns its trace.
absl::StatusOr<Trace> RunScenario(const Scenario& scenario,
                                  TickObserver observer = {});

}  // namespace explore::sim

#endif  // EXPLORE_SIM_SIMULATION_H_
