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


#ifndef EXPLORE_STATION_MISSION_H_
#define EXPLORE_STATION_MISSION_H_

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "explore/link/link_simulator.h"
#include "explore/sim/scenario.h"
#include "explore/sim/simulation.h"
#include "explore/station/station.h"

namespace explore::station {

struct MissionConfig {
  link::LinkConfig downlink;  // station -> robot
  link::LinkConfig uplink = {.seed = 2};
  double telemetry_period = 2.0;  // seconds between TELEMETRY frames
  StationConfig station;
};

// A supervised simulation, its radio, and a base station on one simulated
// clock. The robot and the station only exchange encoded frames through the
// two link simulators, so a mission is as deterministic as the simulation.
//
// Per control tick: downlink frames due by now reach the robot, the
// simulation steps, the robot reports (STUCK on entering stuck, TELEMETRY
// periodically, ACK per command), and uplink frames due by now reach the
// station, which then runs its own service tick.
class HeadlessMission {
 public:
  static absl::StatusOr<std::unique_ptr<HeadlessMission>> Create(
      const sim::Scenario& scenario, const MissionConfig& config);

  absl::Status Step();
  // Steps until the simulated clock reaches `time` or the run ends.
  absl::Status AdvanceTo(double time);

  bool done() const { return sim_->done(); }
  double time() const { return sim_->time(); }
  Station& station() { return station_; }
  const Station& station() const { return station_; }
  const sim::Simulation& simulation() const { return *sim_; }
  const link::LinkSimulator& downlink() const { return downlink_; }
  const link::LinkSimulator& uplink() const { return uplink_; }
  link::LinkSimulator& mutable_downlink() { return downlink_; }
  link::LinkSimulator& mutable_uplink() { return uplink_; }
  // Station time at which the first STUCK frame was sent, if any.
  std::optional<double> first_stuck_sent() const { return first_stuck_sent_; }

 private:
  struct PendingMap {
    uint8_t seq;
    MapUpdate map;
  };

  HeadlessMission(const MissionConfig& config,
                  std::unique_ptr<sim::Simulation> sim,
                  link::LinkSimulator downlink, link::LinkSimulator uplink);

  void ApplyDownlink(double now);
  absl::Status Report(double now);
  absl::Status SendUp(link::Payload payload, double now);
  MapUpdate CaptureMap() const;

  MissionConfig config_;
  std::unique_ptr<sim::Simulation> sim_;
  link::LinkSimulator downlink_;
  link::LinkSimulator uplink_;
  Station station_;
  uint8_t robot_seq_ = 0;
  double next_telemetry_ = 0.0;
  bool was_stuck_ = false;
  std::optional<double> first_stuck_sent_;
  std::deque<PendingMap> pending_maps_;
};

}  // namespace explore::station

#endif  // EXPLORE_STATION_MISSION_H_
