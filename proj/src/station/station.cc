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


#include "explore/station/station.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>
#include <variant>

namespace explore::station {
namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 7> kDecisionCodes = {
    "track", "continue", "new_path", "stuck", "complete", "teleop",
    "collision"};

// True when `value` survives the wire's fixed-point scaling without
// saturation.
template <typename Int>
bool Representable(double value, double scale) {
  const double scaled = std::round(value * scale);
  return std::isfinite(scaled) &&
         scaled >= static_cast<double>(std::numeric_limits<Int>::min()) &&
         scaled <= static_cast<double>(std::numeric_limits<Int>::max());
}

}  // namespace

uint8_t DecisionCode(std::string_view decision) {
  for (size_t i = 0; i < kDecisionCodes.size(); ++i) {
    if (kDecisionCodes[i] == decision) return static_cast<uint8_t>(i);
  }
  return 255;
}

std::string_view DecisionFromCode(uint8_t code) {
  return code < kDecisionCodes.size() ? kDecisionCodes[code] : "unknown";
}

std::string_view CommandKindName(CommandKind kind) {
  switch (kind) {
    case CommandKind::kDrive:
      return "drive";
    case CommandKind::kGoto:
      return "goto";
    case CommandKind::kResumeAutonomy:
      return "resume_autonomy";
    case CommandKind::kStop:
      return "stop";
  }
  return "unknown";
}

std::optional<CommandKind> ParseCommandKind(std::string_view name) {
  for (CommandKind k : {CommandKind::kDrive, CommandKind::kGoto,
                        CommandKind::kResumeAutonomy, CommandKind::kStop}) {
    if (CommandKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view CommandStatusName(CommandStatus status) {
  switch (status) {
    case CommandStatus::kAccepted:
      return "accepted";
    case CommandStatus::kConflict:
      return "conflict";
    case CommandStatus::kEncodingFailure:
      return "encoding_failure";
    case CommandStatus::kInvalid:
      return "invalid";
    case CommandStatus::kLinkFailure:
      return "link_failure";
  }
  return "unknown";
}

json PoseToJson(const geometry::RobotPose& pose) {
  return {{"x", pose.position.x},
          {"y", pose.position.y},
          {"heading", pose.heading}};
}

json PointsToJson(const std::vector<geometry::Point2>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back({p.x, p.y});
  return out;
}

json PolygonsToJson(const std::vector<planning::PolygonWithHoles>& polygons) {
  json out = json::array();
  for (const auto& poly : polygons) {
    json holes = json::array();
    for (const auto& h : poly.holes) holes.push_back(PointsToJson(h));
    out.push_back({{"outer", PointsToJson(poly.outer)}, {"holes", holes}});
  }
  return out;
}

Station::Station(StationConfig config, link::LinkSimulator* downlink)
    : config_(std::move(config)), downlink_(downlink) {}

void Station::Advance(double now) { clock_ = std::max(clock_, now); }

void Station::Emit(std::string type, json data, double now) {
  Advance(now);
  log_.push_back(Event{.id = next_event_id_++,
                       .time = clock_,
                       .type = std::move(type),
                       .data = std::move(data)});
  last_emit_ = clock_;
  while (log_.size() > config_.event_log_limit) log_.pop_front();
}

CommandResult Station::Send(link::Payload payload, std::string_view what,
                            double now) {
  CommandResult result;
  const link::Frame frame{.seq = seq_out_, .payload = std::move(payload)};
  absl::StatusOr<link::Transmission> t = downlink_->SendFrame(frame, now);
  if (!t.ok()) {
    result.status = CommandStatus::kLinkFailure;
    result.message = std::string(t.status().message());
    return result;
  }
  result.seq = seq_out_++;
  result.transmission = *t;
  ++frames_sent_;
  Emit("command",
       {{"command", std::string(what)},
        {"frame", std::string(link::FrameKindName(frame.kind()))},
        {"seq", *result.seq},
        {"start", t->start},
        {"airtime", t->airtime}},
       now);
  return result;
}

CommandResult Station::Submit(std::string_view client,
                              const OperatorCommand& command, double now) {
  Advance(now);
  auto reject = [](CommandStatus status, std::string message) {
    CommandResult r;
    r.status = status;
    r.message = std::move(message);
    return r;
  };
  if (client.empty()) {
    return reject(CommandStatus::kInvalid, "client id must not be empty");
  }
  if (driver_.has_value() && *driver_ != client) {
    return reject(CommandStatus::kConflict,
                  "driver slot is held by client '" + *driver_ + "'");
  }

  CommandResult result;
  switch (command.kind) {
    case CommandKind::kDrive: {
      const geometry::Vec2 v = command.velocity;
      if (!geometry::IsFinite(v)) {
        return reject(CommandStatus::kInvalid, "drive needs finite vx, vy");
      }
      if (!Representable<int16_t>(v.dx, 1000.0) ||
          !Representable<int16_t>(v.dy, 1000.0)) {
        return reject(CommandStatus::kEncodingFailure,
                      "drive components must lie within +/-32.767");
      }
      result = Send(link::ControlPayload::FromTracker(v), "drive", now);
      break;
    }
    case CommandKind::kGoto: {
      const geometry::Point2 p = command.target;
      if (!geometry::IsFinite(p)) {
        return reject(CommandStatus::kInvalid, "goto needs finite x, y");
      }
      if (!Representable<int32_t>(p.x, 1000.0) ||
          !Representable<int32_t>(p.y, 1000.0)) {
        return reject(CommandStatus::kEncodingFailure,
                      "goto target beyond the 32-bit millimeter range");
      }
      result = Send(link::PositionPayload::FromPoint(p), "goto", now);
      break;
    }
    case CommandKind::kStop:
      result = Send(link::ControlPayload{}, "stop", now);
      break;
    case CommandKind::kResumeAutonomy:
      result = Send(link::AckPayload{.acked_seq = last_stuck_seq_.value_or(0),
                                     .status = kAckResumeAutonomy},
                    "resume_autonomy", now);
      if (result.accepted()) {
        robot_.stuck = false;
        ReleaseDriver(client, now);
      }
      return result;
  }
  if (result.accepted() && !driver_.has_value()) {
    driver_ = std::string(client);
    Emit("driver", {{"client", *driver_}, {"held", true}}, now);
  }
  return result;
}

void Station::ReleaseDriver(std::string_view client, double now) {
  if (!driver_.has_value() || *driver_ != client) return;
  Emit("driver", {{"client", *driver_}, {"held", false}}, now);
  driver_.reset();
}

void Station::UpdatePose(const geometry::RobotPose& pose, double now) {
  robot_.pose = pose;
  robot_.time = clock_;
  robot_.trajectory.push_back(pose.position);
  Emit("pose", {{"pose", PoseToJson(pose)}, {"coverage", robot_.coverage}},
       now);
}

void Station::UpdateDecision(std::string_view decision, double now) {
  if (decision == robot_.decision) return;
  Emit("decision",
       {{"from", robot_.decision}, {"to", std::string(decision)}}, now);
  robot_.decision = std::string(decision);
}

void Station::OnUplink(std::span<const uint8_t> bytes, double now,
                       const MapUpdate* map) {
  Advance(now);
  const link::DecodeResult decoded = link::DecodeFrame(bytes);
  if (!decoded.ok()) {
    ++frames_rejected_;
    Emit("link_error",
         {{"error", std::string(link::DecodeErrorName(decoded.error))}}, now);
    return;
  }
  ++frames_received_;
  const link::Frame& frame = decoded.frame;
  if (last_seq_in_.has_value()) {
    const auto expected = static_cast<uint8_t>(*last_seq_in_ + 1);
    inbound_gaps_ += static_cast<uint8_t>(frame.seq - expected);
  }
  last_seq_in_ = frame.seq;

  if (const auto* stuck = std::get_if<link::StuckPayload>(&frame.payload)) {
    last_stuck_seq_ = frame.seq;
    robot_.stuck = true;
    UpdatePose(stuck->ToPose(), now);
    UpdateDecision("stuck", now);
    Emit("stuck",
         {{"pose", PoseToJson(stuck->ToPose())}, {"seq", frame.seq}}, now);
  } else if (const auto* t =
                 std::get_if<link::TelemetryPayload>(&frame.payload)) {
    robot_.coverage = t->coverage_bp / 10000.0;
    const std::string_view decision = DecisionFromCode(t->decision);
    if (decision != "stuck" && robot_.decision == "stuck") robot_.stuck = false;
    UpdatePose(link::StuckPayload{t->x_mm, t->y_mm, t->heading_mrad}.ToPose(),
               now);
    UpdateDecision(decision, now);
    if (map != nullptr) {
      robot_.explored = map->explored;
      robot_.obstacles = map->obstacles;
      json obstacles = json::array();
      for (const auto& o : robot_.obstacles) obstacles.push_back(PointsToJson(o));
      Emit("explored",
           {{"coverage", robot_.coverage},
            {"polygons", PolygonsToJson(robot_.explored)},
            {"obstacles", obstacles}},
           now);
    }
  } else if (const auto* ack = std::get_if<link::AckPayload>(&frame.payload)) {
    Emit("ack", {{"acked_seq", ack->acked_seq}, {"status", ack->status}}, now);
  } else {
    ++frames_rejected_;
    Emit("link_error",
         {{"error", "unexpected_kind"},
          {"kind", std::string(link::FrameKindName(frame.kind()))}},
         now);
  }
}

void Station::Tick(double now) {
  Advance(now);
  if (clock_ - last_emit_ >= config_.heartbeat_period) {
    Emit("heartbeat", json::object(), now);
  }
}

json Station::Snapshot() const {
  json obstacles = json::array();
  for (const auto& o : robot_.obstacles) obstacles.push_back(PointsToJson(o));
  json robot = {{"time", robot_.time},
                {"pose", robot_.pose ? PoseToJson(*robot_.pose) : json()},
                {"decision", robot_.decision},
                {"coverage", robot_.coverage},
                {"stuck", robot_.stuck},
                {"trajectory", PointsToJson(robot_.trajectory)},
                {"explored", PolygonsToJson(robot_.explored)},
                {"obstacles", obstacles}};
  json link = {{"last_seq_out", frames_sent_ ? json(last_seq_out()) : json()},
               {"last_seq_in", last_seq_in_ ? json(*last_seq_in_) : json()},
               {"frames_sent", frames_sent_},
               {"frames_received", frames_received_},
               {"frames_rejected", frames_rejected_},
               {"inbound_gaps", inbound_gaps_}};
  return {{"session", config_.session_id},
          {"time", clock_},
          {"event_id", last_event_id()},
          {"driver", driver_ ? json(*driver_) : json()},
          {"robot", robot},
          {"link", link}};
}

std::vector<Event> Station::EventsAfter(uint64_t cursor) const {
  std::vector<Event> out;
  auto it = std::upper_bound(
      log_.begin(), log_.end(), cursor,
      [](uint64_t c, const Event& e) { return c < e.id; });
  out.assign(it, log_.end());
  return out;
}

}  // namespace explore::station
