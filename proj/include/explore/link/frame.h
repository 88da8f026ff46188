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


#ifndef EXPLORE_LINK_FRAME_H_
#define EXPLORE_LINK_FRAME_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "absl/status/statusor.h"
#include "explore/geometry/vec2.h"

namespace explore::link {

// Wire layout, big-endian throughout:
//
//   [version:4 | kind:4] [seq] [payload ...] [crc hi] [crc lo]
//
// The CRC (see crc16.h) covers every byte before it. Payload layouts are
// fixed per kind except TELEMETRY, which ends in a length-prefixed note.
inline constexpr uint8_t kProtocolVersion = 1;
inline constexpr size_t kMaxFrameBytes = 222;
inline constexpr size_t kHeaderBytes = 2;
inline constexpr size_t kCrcBytes = 2;

enum class FrameKind : uint8_t {
  kControl = 1,
  kPosition = 2,
  kStuck = 3,
  kTelemetry = 4,
  kAck = 5,
};

std::string_view FrameKindName(FrameKind kind);

// Tracker direction for the robot, in thousandths.
struct ControlPayload {
  int16_t vx_milli = 0;
  int16_t vy_milli = 0;

  // Rounds to the nearest thousandth, saturating at the int16 range.
  static ControlPayload FromTracker(geometry::Vec2 tracker);
  geometry::Vec2 ToTracker() const;
  friend bool operator==(const ControlPayload&,
                         const ControlPayload&) = default;
};

// World-frame goal position, millimeters.
struct PositionPayload {
  int32_t x_mm = 0;
  int32_t y_mm = 0;

  static PositionPayload FromPoint(geometry::Point2 p);
  geometry::Point2 ToPoint() const;
  friend bool operator==(const PositionPayload&,
                         const PositionPayload&) = default;
};

// Robot -> station: the planner found no feasible candidate here.
struct StuckPayload {
  int32_t x_mm = 0;
  int32_t y_mm = 0;
  int16_t heading_mrad = 0;

  static StuckPayload FromPose(const geometry::RobotPose& pose);
  geometry::RobotPose ToPose() const;
  friend bool operator==(const StuckPayload&, const StuckPayload&) = default;
};

// Robot -> station status report. `note` is free text (UTF-8 by convention)
// and the only variable-length field in the protocol.
struct TelemetryPayload {
  int32_t x_mm = 0;
  int32_t y_mm = 0;
  int16_t heading_mrad = 0;
  uint8_t decision = 0;        // sim decision code, see station docs
  uint16_t coverage_bp = 0;    // explored fraction in basis points
  std::string note;

  friend bool operator==(const TelemetryPayload&,
                         const TelemetryPayload&) = default;
};

// Acknowledges the frame with sequence number `acked_seq`.
struct AckPayload {
  uint8_t acked_seq = 0;
  uint8_t status = 0;  // 0 accepted, 1 rejected, 2 resume autonomy

  friend bool operator==(const AckPayload&, const AckPayload&) = default;
};

using Payload = std::variant<ControlPayload, PositionPayload, StuckPayload,
                             TelemetryPayload, AckPayload>;

struct Frame {
  uint8_t seq = 0;
  Payload payload;

  FrameKind kind() const;
  friend bool operator==(const Frame&, const Frame&) = default;
};

// Size of the encoded frame, header and CRC included.
size_t EncodedSize(const Frame& frame);

// Fails with OUT_OF_RANGE when the frame would exceed kMaxFrameBytes (only
// possible through a long telemetry note).
absl::StatusOr<std::vector<uint8_t>> EncodeFrame(const Frame& frame);

enum class DecodeError {
  kNone,
  kTooShort,
  kBadCrc,
  kBadVersion,
  kUnknownKind,
  kTrailingBytes,
  kOversize,
};

std::string_view DecodeErrorName(DecodeError error);

struct DecodeResult {
  DecodeError error = DecodeError::kNone;
  Frame frame;  // meaningful only when ok()

  bool ok() const { return error == DecodeError::kNone; }
};

// Accepts arbitrary bytes. Checks run in this order: minimum length, size
// budget, CRC, version, kind, then the payload length for that kind (short
// payloads report kTooShort, long ones kTrailingBytes).
DecodeResult DecodeFrame(std::span<const uint8_t> bytes);

}  // namespace explore::link

#endif  // EXPLORE_LINK_FRAME_H_
