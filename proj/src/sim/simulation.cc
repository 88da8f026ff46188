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

#include "explore/sim/simulation.h"

#include <cmath>
#include <limits>

#include "absl/status/status.h"

namespace explore::sim {

using geometry::Vec2;
using planning::Decision;

absl::StatusOr<std::unique_ptr<Simulation>> Simulation::Create(
    const Scenario& scenario) {
  if (absl::Status s = ValidateScenario(scenario); !s.ok()) return s;
  return std::unique_ptr<Simulation>(new Simulation(scenario, scenario.world));
}

Simulation::Simulation(const Scenario& scenario, World world)
    : scenario_(scenario),
      planner_(MakePlannerConfig(scenario)),
      sensor_(MakeSensorConfig(scenario)),
      pose_provider_(scenario.pose_provider),
      dt_(1.0 / scenario.rates.control_hz) {
  scenario_.world = std::move(world);
  state_.pose = StartPose(scenario_);
  estimate_ = state_.pose;
  trace_.world = scenario_.world.name;
  trace_.seed = scenario_.sensor_seed;
  trace_.config_text = SerializeScenario(scenario_);
  trace_.config_hash = ConfigHash(trace_.config_text);
}

bool Simulation::Due(double rate_hz) const {
  if (tick_ == 0) return true;
  const double ratio = rate_hz / scenario_.rates.control_hz;
  return std::floor(tick_ * ratio + 1e-9) !=
         std::floor((tick_ - 1) * ratio + 1e-9);
}

void Simulation::SetTeleopTracker(Vec2 tracker) {
  teleop_ = Teleop{};
  teleop_->tracker = tracker;
}

void Simulation::SetTeleopGoal(geometry::Point2 target, double tolerance) {
  teleop_ = Teleop{};
  teleop_->goal = target;
  teleop_->tolerance = tolerance;
}

void Simulation::ResumeAutonomy() {
  teleop_.reset();
  last_decision_.reset();
  stack_.reference_scene.reset();
  stack_.stuck = false;
  state_.tracker = {};
}

absl::Status Simulation::Step() {
  if (done()) return absl::FailedPreconditionError("simulation has ended");
  const double now = time();
  estimate_ = pose_provider_.Estimate(state_.pose);

  TraceRecord record;
  record.tick = tick_;
  record.time = now;
  record.pose = state_.pose;
  record.collision =
      CollisionCheck(scenario_.world, state_.pose, scenario_.robot_radius);

  const planning::PointCloud* sensed = nullptr;
  if (!record.collision && Due(scenario_.rates.sense_hz)) {
    absl::StatusOr<planning::PointCloud> cloud =
        sensor_.Sense(scenario_.world, state_.pose, estimate_, now);
    if (!cloud.ok()) return cloud.status();
    cloud_ = *std::move(cloud);
    sensed = &*cloud_;
  }

  std::optional<planning::PlannerOutput> plan;
  if (record.collision) {
    record.decision = "collision";
    state_.tracker = {};
  } else if (teleop_.has_value()) {
    record.decision = "teleop";
    if (teleop_->goal.has_value()) {
      const Vec2 to_goal = *teleop_->goal - estimate_.position;
      teleop_->tracker =
          geometry::Norm(to_goal) <= teleop_->tolerance ? Vec2{} : to_goal;
    }
    state_.tracker = teleop_->tracker;
  } else if (Due(scenario_.rates.plan_hz)) {
    geometry::RobotState believed = state_;
    believed.pose = estimate_;
    absl::StatusOr<planning::PlanResult> result =
        planning::PlanStep(believed, *cloud_, std::move(stack_), planner_);
    if (!result.ok()) return result.status();
    stack_ = std::move(result->stack);
    plan = std::move(result->output);
    state_.tracker = plan->tracker;
    last_decision_ = plan->decision;
    record.decision = std::string(planning::DecisionName(plan->decision));
  } else {
    state_.tracker = planning::AdvanceTracker(state_.tracker, stack_,
                                              estimate_.position, planner_);
    record.decision = "track";
  }

  record.path_id = static_cast<int>(stack_.entries.size());
  if (cloud_.has_value()) {
    record.cloud_points = static_cast<int>(cloud_->returns.size());
    double min_range = std::numeric_limits<double>::infinity();
    for (const planning::SensorReturn& r : cloud_->returns) {
      if (!r.free) ++record.cloud_hits;
      min_range = std::min(min_range, r.range);
    }
    record.cloud_min_range = cloud_->returns.empty() ? 0.0 : min_range;
  }
  trace_.records.push_back(record);
  if (observer_) {
    observer_(TickEvent{.record = trace_.records.back(),
                        .state = state_,
                        .estimate = estimate_,
                        .cloud = sensed,
                        .plan = plan ? &*plan : nullptr,
                        .coverage = stack_});
  }

  if (record.collision) {
    Finish(Outcome::kCollision);
    return absl::OkStatus();
  }
  if (plan.has_value()) {
    if (plan->decision == Decision::kComplete) {
      Finish(Outcome::kComplete);
      return absl::OkStatus();
    }
    if (plan->decision == Decision::kStuck && !supervised_) {
      Finish(Outcome::kStuck);
      return absl::OkStatus();
    }
  }

  // Steering uses the believed heading; motion happens in the true world.
  geometry::RobotState believed = state_;
  believed.pose = estimate_;
  const VelocityCommand command = SteerFromTracker(believed, scenario_.limits);
  const geometry::Point2 before = state_.pose.position;
  state_ = StepRobot(state_, command, dt_, scenario_.limits);
  distance_ += geometry::Distance(before, state_.pose.position);

  ++tick_;
  if (time() > scenario_.duration) Finish(Outcome::kTimeout);
  return absl::OkStatus();
}

absl::Status Simulation::Run() {
  while (!done()) {
    if (absl::Status s = Step(); !s.ok()) return s;
  }
  return absl::OkStatus();
}

absl::StatusOr<Trace> RunScenario(const Scenario& scenario,
                                  TickObserver observer) {
  absl::StatusOr<std::unique_ptr<Simulation>> sim = Simulation::Create(scenario);
  if (!sim.ok()) return sim.status();
  (*sim)->set_observer(std::move(observer));
  if (absl::Status s = (*sim)->Run(); !s.ok()) return s;
  return (*sim)->trace();
}

}  // namespace explore::sim
