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


#include "explore/station/mission.h"

#include <cmath>
#include <utility>
#include <variant>

#include "explore/planning/local_vertices.h"

namespace explore::station {

absl::StatusOr<std::unique_ptr<HeadlessMission>> HeadlessMission::Create(
    const sim::Scenario& scenario, const MissionConfig& config) {
  if (!(config.telemetry_period > 0.0)) {
    return absl::InvalidArgumentError("telemetry_period must be positive");
  }
  absl::StatusOr<std::unique_ptr<sim::Simulation>> sim =
      sim::Simulation::Create(scenario);
  if (!sim.ok()) return sim.status();
  (*sim)->set_supervised(true);
  absl::StatusOr<link::LinkSimulator> down =
      link::LinkSimulator::Create(config.downlink);
  if (!down.ok()) return down.status();
  absl::StatusOr<link::LinkSimulator> up =
      link::LinkSimulator::Create(config.uplink);
  if (!up.ok()) return up.status();
  return std::unique_ptr<HeadlessMission>(new HeadlessMission(
      config, *std::move(sim), *std::move(down), *std::move(up)));
}

HeadlessMission::HeadlessMission(const MissionConfig& config,
                                 std::unique_ptr<sim::Simulation> sim,
                                 link::LinkSimulator downlink,
                                 link::LinkSimulator uplink)
    : config_(config),
      sim_(std::move(sim)),
      downlink_(std::move(downlink)),
      uplink_(std::move(uplink)),
      station_(config.station, &downlink_) {}

absl::Status HeadlessMission::SendUp(link::Payload payload, double now) {
  const link::Frame frame{.seq = robot_seq_, .payload = std::move(payload)};
  absl::StatusOr<link::Transmission> t = uplink_.SendFrame(frame, now);
  if (!t.ok()) return t.status();
  ++robot_seq_;
  return absl::OkStatus();
}

MapUpdate HeadlessMission::CaptureMap() const {
  MapUpdate map;
  map.explored = sim_->coverage().explored.parts();
  if (const auto& cloud = sim_->last_cloud(); cloud.has_value()) {
    for (const auto& chain :
         planning::ClusterChains(*cloud, sim_->planner_config().epsilon)) {
      std::vector<geometry::Point2> points;
      points.reserve(chain.size());
      for (int i : chain) {
        points.push_back(
            geometry::BodyToWorld(cloud->pose, cloud->returns[i].point));
      }
      map.obstacles.push_back(std::move(points));
    }
  }
  return map;
}

// The robot side of the link: operator frames override the planner until a
// resume arrives. Every command is acknowledged.
void HeadlessMission::ApplyDownlink(double now) {
  for (const std::vector<uint8_t>& bytes : downlink_.Receive(now)) {
    const link::DecodeResult decoded = link::DecodeFrame(bytes);
    if (!decoded.ok()) continue;
    const link::Frame& f = decoded.frame;
    uint8_t status = kAckAccepted;
    if (const auto* c = std::get_if<link::ControlPayload>(&f.payload)) {
      sim_->SetTeleopTracker(c->ToTracker());
    } else if (const auto* p = std::get_if<link::PositionPayload>(&f.payload)) {
      sim_->SetTeleopGoal(p->ToPoint());
    } else if (const auto* a = std::get_if<link::AckPayload>(&f.payload);
               a != nullptr && a->status == kAckResumeAutonomy) {
      sim_->ResumeAutonomy();
      was_stuck_ = false;
    } else {
      status = kAckRejected;
    }
    // An ACK that cannot be scheduled is simply not sent; the operator sees
    // the missing acknowledgement.
    SendUp(link::AckPayload{.acked_seq = f.seq, .status = status}, now)
        .IgnoreError();
  }
}

absl::Status HeadlessMission::Report(double now) {
  const auto& records = sim_->trace().records;
  if (records.empty()) return absl::OkStatus();
  const sim::TraceRecord& last = records.back();
  const bool stuck =
      sim_->last_decision() == planning::Decision::kStuck && !sim_->teleop_active();
  if (stuck && !was_stuck_) {
    if (absl::Status s = SendUp(link::StuckPayload::FromPose(last.pose), now);
        !s.ok()) {
      return s;
    }
    if (!first_stuck_sent_.has_value()) first_stuck_sent_ = now;
  }
  was_stuck_ = stuck;

  if (now + 1e-9 >= next_telemetry_ || sim_->done()) {
    next_telemetry_ = now + config_.telemetry_period;
    link::TelemetryPayload t;
    const link::StuckPayload pose = link::StuckPayload::FromPose(last.pose);
    t.x_mm = pose.x_mm;
    t.y_mm = pose.y_mm;
    t.heading_mrad = pose.heading_mrad;
    t.decision = DecisionCode(stuck ? "stuck" : last.decision);
    t.coverage_bp = static_cast<uint16_t>(
        std::lround(sim_->coverage().covered_fraction * 10000.0));
    pending_maps_.push_back({robot_seq_, CaptureMap()});
    if (absl::Status s = SendUp(std::move(t), now); !s.ok()) {
      pending_maps_.pop_back();
      return s;
    }
  }
  return absl::OkStatus();
}

absl::Status HeadlessMission::Step() {
  const double now = sim_->time();
  ApplyDownlink(now);
  if (absl::Status s = sim_->Step(); !s.ok()) return s;
  if (absl::Status s = Report(now); !s.ok()) return s;

  for (const std::vector<uint8_t>& bytes : uplink_.Receive(now)) {
    const MapUpdate* map = nullptr;
    const link::DecodeResult decoded = link::DecodeFrame(bytes);
    if (decoded.ok() &&
        std::holds_alternative<link::TelemetryPayload>(decoded.frame.payload)) {
      // Maps of telemetry frames lost on the way are skipped over.
      while (!pending_maps_.empty() &&
             pending_maps_.front().seq != decoded.frame.seq) {
        pending_maps_.pop_front();
      }
      if (!pending_maps_.empty()) map = &pending_maps_.front().map;
    }
    station_.OnUplink(bytes, now, map);
    if (map != nullptr) pending_maps_.pop_front();
  }
  station_.Tick(now);
  return absl::OkStatus();
}

absl::Status HeadlessMission::AdvanceTo(double time) {
  while (!done() && sim_->time() < time) {
    if (absl::Status s = Step(); !s.ok()) return s;
  }
  return absl::OkStatus();
}

}  // namespace explore::station
