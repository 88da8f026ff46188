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


#ifndef EXPLORE_STATION_STATION_H_
#define EXPLORE_STATION_STATION_H_

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "explore/geometry/vec2.h"
#include "explore/link/frame.h"
#include "explore/link/link_simulator.h"
#include "explore/planning/region.h"
#include "json.hpp"

namespace explore::station {

// Status carried by an ACK sent from the station to the robot. The robot
// uses plain kAckAccepted/kAckRejected for its own acknowledgements.
inline constexpr uint8_t kAckAccepted = 0;
inline constexpr uint8_t kAckRejected = 1;
inline constexpr uint8_t kAckResumeAutonomy = 2;

// Wire codes for the decision strings the simulator records.
uint8_t DecisionCode(std::string_view decision);
std::string_view DecisionFromCode(uint8_t code);

enum class CommandKind { kDrive, kGoto, kResumeAutonomy, kStop };

std::string_view CommandKindName(CommandKind kind);
std::optional<CommandKind> ParseCommandKind(std::string_view name);

struct OperatorCommand {
  CommandKind kind = CommandKind::kStop;
  geometry::Vec2 velocity;    // drive: world-frame tracker vector
  geometry::Point2 target;    // goto: world-frame position

  static OperatorCommand Drive(double vx, double vy) {
    return {CommandKind::kDrive, {vx, vy}, {}};
  }
  static OperatorCommand Goto(double x, double y) {
    return {CommandKind::kGoto, {}, {x, y}};
  }
  static OperatorCommand Resume() {
    return {CommandKind::kResumeAutonomy, {}, {}};
  }
  static OperatorCommand Stop() { return {CommandKind::kStop, {}, {}}; }
};

enum class CommandStatus {
  kAccepted,
  kConflict,         // another client holds the driver slot
  kEncodingFailure,  // value not representable on the wire
  kInvalid,          // malformed request (non-finite values, empty client)
  kLinkFailure,      // the link refused the frame
};

std::string_view CommandStatusName(CommandStatus status);

struct CommandResult {
  CommandStatus status = CommandStatus::kAccepted;
  std::string message;
  std::optional<uint8_t> seq;  // sequence number of the frame sent, if any
  std::optional<link::Transmission> transmission;

  bool accepted() const { return status == CommandStatus::kAccepted; }
};

// Event feed entry. Ids are strictly increasing within a session; `time` is
// the station clock (simulated seconds in headless mode).
struct Event {
  uint64_t id = 0;
  double time = 0.0;
  std::string type;
  nlohmann::json data;
};

// What the station believes about the robot; only ever updated from frames
// (and the map side channel) it has actually received.
struct RobotView {
  double time = 0.0;  // station time of the last update
  std::optional<geometry::RobotPose> pose;
  std::string decision = "unknown";
  double coverage = 0.0;
  bool stuck = false;
  std::vector<geometry::Point2> trajectory;
  std::vector<planning::PolygonWithHoles> explored;
  std::vector<std::vector<geometry::Point2>> obstacles;
};

// Explored region and obstacle clusters captured by the robot when it sent a
// TELEMETRY frame. Polygons do not fit the long-range payload, so they travel
// beside the frame and are applied only if the frame itself arrives.
struct MapUpdate {
  std::vector<planning::PolygonWithHoles> explored;
  std::vector<std::vector<geometry::Point2>> obstacles;
};

struct StationConfig {
  std::string session_id = "session-1";
  double heartbeat_period = 1.0;  // seconds of silence before a heartbeat
  size_t event_log_limit = 20000;
};

// The operator-side session. Single-threaded: callers serialize access (the
// HTTP service holds a mutex around every call).
class Station {
 public:
  // `downlink` carries station -> robot frames and must outlive the station.
  Station(StationConfig config, link::LinkSimulator* downlink);

  // Encodes `command` for the robot and hands it to the downlink. The first
  // client to drive, goto or stop takes the driver slot; it is released by
  // that client's resume_autonomy or by ReleaseDriver.
  CommandResult Submit(std::string_view client, const OperatorCommand& command,
                       double now);
  void ReleaseDriver(std::string_view client, double now);

  // Handles one frame from the robot. `map` accompanies TELEMETRY frames.
  void OnUplink(std::span<const uint8_t> bytes, double now,
                const MapUpdate* map = nullptr);

  // Service tick: emits a heartbeat after `heartbeat_period` without events.
  void Tick(double now);

  // Full state, as sent first on every event-stream attach.
  nlohmann::json Snapshot() const;
  // Events with id > `cursor`, oldest first. If the log has been trimmed
  // past `cursor`, returns only what is left; clients resync via Snapshot.
  std::vector<Event> EventsAfter(uint64_t cursor) const;
  uint64_t last_event_id() const { return next_event_id_ - 1; }

  const RobotView& robot() const { return robot_; }
  const std::optional<std::string>& driver() const { return driver_; }
  const std::string& session_id() const { return config_.session_id; }
  uint8_t last_seq_out() const { return static_cast<uint8_t>(seq_out_ - 1); }
  std::optional<uint8_t> last_seq_in() const { return last_seq_in_; }
  uint64_t frames_sent() const { return frames_sent_; }
  uint64_t frames_received() const { return frames_received_; }
  uint64_t frames_rejected() const { return frames_rejected_; }
  uint64_t inbound_gaps() const { return inbound_gaps_; }
  double now() const { return clock_; }

 private:
  void Emit(std::string type, nlohmann::json data, double now);
  void Advance(double now);
  CommandResult Send(link::Payload payload, std::string_view what,
                     double now);
  void UpdatePose(const geometry::RobotPose& pose, double now);
  void UpdateDecision(std::string_view decision, double now);

  StationConfig config_;
  link::LinkSimulator* downlink_;
  double clock_ = 0.0;
  double last_emit_ = 0.0;
  uint8_t seq_out_ = 0;
  std::optional<uint8_t> last_seq_in_;
  std::optional<uint8_t> last_stuck_seq_;
  std::optional<std::string> driver_;
  RobotView robot_;
  std::deque<Event> log_;
  uint64_t next_event_id_ = 1;
  uint64_t frames_sent_ = 0;
  uint64_t frames_received_ = 0;
  uint64_t frames_rejected_ = 0;
  uint64_t inbound_gaps_ = 0;
};

// JSON helpers for station state.
nlohmann::json PoseToJson(const geometry::RobotPose& pose);
nlohmann::json PointsToJson(const std::vector<geometry::Point2>& points);
nlohmann::json PolygonsToJson(
    const std::vector<planning::PolygonWithHoles>& polygons);

}  // namespace explore::station

#endif  // EXPLORE_STATION_STATION_H_
