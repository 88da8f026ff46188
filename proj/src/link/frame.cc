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


#include "explore/link/frame.h"

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"
#include "explore/link/crc16.h"

namespace explore::link {
namespace {

constexpr size_t kControlBytes = 4;
constexpr size_t kPositionBytes = 8;
constexpr size_t kStuckBytes = 10;
constexpr size_t kTelemetryFixedBytes = 14;  // pose, decision, coverage, len
constexpr size_t kAckBytes = 2;

template <typename Int>
Int SaturatingRound(double value) {
  if (std::isnan(value)) return 0;
  const double r = std::round(value);
  if (r <= static_cast<double>(std::numeric_limits<Int>::min())) {
    return std::numeric_limits<Int>::min();
  }
  if (r >= static_cast<double>(std::numeric_limits<Int>::max())) {
    return std::numeric_limits<Int>::max();
  }
  return static_cast<Int>(r);
}

class Writer {
 public:
  explicit Writer(std::vector<uint8_t>* out) : out_(out) {}
  void U8(uint8_t v) { out_->push_back(v); }
  void U16(uint16_t v) {
    out_->push_back(static_cast<uint8_t>(v >> 8));
    out_->push_back(static_cast<uint8_t>(v));
  }
  void I16(int16_t v) { U16(static_cast<uint16_t>(v)); }
  void I32(int32_t v) {
    const auto u = static_cast<uint32_t>(v);
    U16(static_cast<uint16_t>(u >> 16));
    U16(static_cast<uint16_t>(u));
  }

 private:
  std::vector<uint8_t>* out_;
};

// Callers check the remaining length before reading.
class Reader {
 public:
  explicit Reader(std::span<const uint8_t> in) : in_(in) {}
  uint8_t U8() { return in_[pos_++]; }
  uint16_t U16() {
    const uint16_t hi = U8();
    return static_cast<uint16_t>((hi << 8) | U8());
  }
  int16_t I16() { return static_cast<int16_t>(U16()); }
  int32_t I32() {
    const uint32_t hi = U16();
    return static_cast<int32_t>((hi << 16) | U16());
  }
  size_t remaining() const { return in_.size() - pos_; }
  std::span<const uint8_t> Take(size_t n) {
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  std::span<const uint8_t> in_;
  size_t pos_ = 0;
};

size_t PayloadSize(const Payload& payload) {
  return std::visit(
      [](const auto& p) -> size_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ControlPayload>) return kControlBytes;
        if constexpr (std::is_same_v<T, PositionPayload>) return kPositionBytes;
        if constexpr (std::is_same_v<T, StuckPayload>) return kStuckBytes;
        if constexpr (std::is_same_v<T, TelemetryPayload>) {
          return kTelemetryFixedBytes + p.note.size();
        }
        if constexpr (std::is_same_v<T, AckPayload>) return kAckBytes;
      },
      payload);
}

void WritePayload(const Payload& payload, Writer& w) {
  std::visit(
      [&w](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ControlPayload>) {
          w.I16(p.vx_milli);
          w.I16(p.vy_milli);
        } else if constexpr (std::is_same_v<T, PositionPayload>) {
          w.I32(p.x_mm);
          w.I32(p.y_mm);
        } else if constexpr (std::is_same_v<T, StuckPayload>) {
          w.I32(p.x_mm);
          w.I32(p.y_mm);
          w.I16(p.heading_mrad);
        } else if constexpr (std::is_same_v<T, TelemetryPayload>) {
          w.I32(p.x_mm);
          w.I32(p.y_mm);
          w.I16(p.heading_mrad);
          w.U8(p.decision);
          w.U16(p.coverage_bp);
          w.U8(static_cast<uint8_t>(p.note.size()));
          for (char c : p.note) w.U8(static_cast<uint8_t>(c));
        } else {
          w.U8(p.acked_seq);
          w.U8(p.status);
        }
      },
      payload);
}

DecodeError ParsePayload(FrameKind kind, std::span<const uint8_t> body,
                         Payload* out) {
  auto check = [&body](size_t need) {
    if (body.size() < need) return DecodeError::kTooShort;
    if (body.size() > need) return DecodeError::kTrailingBytes;
    return DecodeError::kNone;
  };
  Reader r(body);
  switch (kind) {
    case FrameKind::kControl: {
      if (auto e = check(kControlBytes); e != DecodeError::kNone) return e;
      ControlPayload p;
      p.vx_milli = r.I16();
      p.vy_milli = r.I16();
      *out = p;
      return DecodeError::kNone;
    }
    case FrameKind::kPosition: {
      if (auto e = check(kPositionBytes); e != DecodeError::kNone) return e;
      PositionPayload p;
      p.x_mm = r.I32();
      p.y_mm = r.I32();
      *out = p;
      return DecodeError::kNone;
    }
    case FrameKind::kStuck: {
      if (auto e = check(kStuckBytes); e != DecodeError::kNone) return e;
      StuckPayload p;
      p.x_mm = r.I32();
      p.y_mm = r.I32();
      p.heading_mrad = r.I16();
      *out = p;
      return DecodeError::kNone;
    }
    case FrameKind::kTelemetry: {
      if (body.size() < kTelemetryFixedBytes) return DecodeError::kTooShort;
      const size_t note_len = body[kTelemetryFixedBytes - 1];
      if (auto e = check(kTelemetryFixedBytes + note_len);
          e != DecodeError::kNone) {
        return e;
      }
      TelemetryPayload p;
      p.x_mm = r.I32();
      p.y_mm = r.I32();
      p.heading_mrad = r.I16();
      p.decision = r.U8();
      p.coverage_bp = r.U16();
      r.U8();
      auto note = r.Take(note_len);
      p.note.assign(note.begin(), note.end());
      *out = std::move(p);
      return DecodeError::kNone;
    }
    case FrameKind::kAck: {
      if (auto e = check(kAckBytes); e != DecodeError::kNone) return e;
      AckPayload p;
      p.acked_seq = r.U8();
      p.status = r.U8();
      *out = p;
      return DecodeError::kNone;
    }
  }
  return DecodeError::kUnknownKind;
}

}  // namespace

std::string_view FrameKindName(FrameKind kind) {
  switch (kind) {
    case FrameKind::kControl:
      return "CONTROL";
    case FrameKind::kPosition:
      return "POSITION";
    case FrameKind::kStuck:
      return "STUCK";
    case FrameKind::kTelemetry:
      return "TELEMETRY";
    case FrameKind::kAck:
      return "ACK";
  }
  return "UNKNOWN";
}

ControlPayload ControlPayload::FromTracker(geometry::Vec2 tracker) {
  return {SaturatingRound<int16_t>(tracker.dx * 1000.0),
          SaturatingRound<int16_t>(tracker.dy * 1000.0)};
}

geometry::Vec2 ControlPayload::ToTracker() const {
  return {vx_milli / 1000.0, vy_milli / 1000.0};
}

PositionPayload PositionPayload::FromPoint(geometry::Point2 p) {
  return {SaturatingRound<int32_t>(p.x * 1000.0),
          SaturatingRound<int32_t>(p.y * 1000.0)};
}

geometry::Point2 PositionPayload::ToPoint() const {
  return {x_mm / 1000.0, y_mm / 1000.0};
}

StuckPayload StuckPayload::FromPose(const geometry::RobotPose& pose) {
  return {SaturatingRound<int32_t>(pose.position.x * 1000.0),
          SaturatingRound<int32_t>(pose.position.y * 1000.0),
          SaturatingRound<int16_t>(geometry::WrapAngle(pose.heading) * 1000.0)};
}

geometry::RobotPose StuckPayload::ToPose() const {
  return {{x_mm / 1000.0, y_mm / 1000.0}, heading_mrad / 1000.0};
}

FrameKind Frame::kind() const {
  return static_cast<FrameKind>(payload.index() + 1);
}

size_t EncodedSize(const Frame& frame) {
  return kHeaderBytes + PayloadSize(frame.payload) + kCrcBytes;
}

absl::StatusOr<std::vector<uint8_t>> EncodeFrame(const Frame& frame) {
  const size_t size = EncodedSize(frame);
  if (const auto* t = std::get_if<TelemetryPayload>(&frame.payload);
      t != nullptr && t->note.size() > 255) {
    return absl::OutOfRangeError(absl::StrFormat(
        "telemetry note of %d bytes exceeds its 255-byte length field",
        t->note.size()));
  }
  if (size > kMaxFrameBytes) {
    return absl::OutOfRangeError(absl::StrFormat(
        "%s frame of %d bytes exceeds the %d-byte budget",
        std::string(FrameKindName(frame.kind())), size, kMaxFrameBytes));
  }
  std::vector<uint8_t> out;
  out.reserve(size);
  Writer w(&out);
  w.U8(static_cast<uint8_t>((kProtocolVersion << 4) |
                            static_cast<uint8_t>(frame.kind())));
  w.U8(frame.seq);
  WritePayload(frame.payload, w);
  w.U16(Crc16(out));
  return out;
}

std::string_view DecodeErrorName(DecodeError error) {
  switch (error) {
    case DecodeError::kNone:
      return "ok";
    case DecodeError::kTooShort:
      return "too_short";
    case DecodeError::kBadCrc:
      return "bad_crc";
    case DecodeError::kBadVersion:
      return "bad_version";
    case DecodeError::kUnknownKind:
      return "unknown_kind";
    case DecodeError::kTrailingBytes:
      return "trailing_bytes";
    case DecodeError::kOversize:
      return "oversize";
  }
  return "unknown";
}

DecodeResult DecodeFrame(std::span<const uint8_t> bytes) {
  DecodeResult result;
  if (bytes.size() < kHeaderBytes + kCrcBytes) {
    result.error = DecodeError::kTooShort;
    return result;
  }
  if (bytes.size() > kMaxFrameBytes) {
    result.error = DecodeError::kOversize;
    return result;
  }
  const size_t body_end = bytes.size() - kCrcBytes;
  const uint16_t wire_crc =
      static_cast<uint16_t>((bytes[body_end] << 8) | bytes[body_end + 1]);
  if (Crc16(bytes.first(body_end)) != wire_crc) {
    result.error = DecodeError::kBadCrc;
    return result;
  }
  if ((bytes[0] >> 4) != kProtocolVersion) {
    result.error = DecodeError::kBadVersion;
    return result;
  }
  const uint8_t kind = bytes[0] & 0x0F;
  if (kind < static_cast<uint8_t>(FrameKind::kControl) ||
      kind > static_cast<uint8_t>(FrameKind::kAck)) {
    result.error = DecodeError::kUnknownKind;
    return result;
  }
  result.frame.seq = bytes[1];
  result.error =
      ParsePayload(static_cast<FrameKind>(kind),
                   bytes.subspan(kHeaderBytes, body_end - kHeaderBytes),
                   &result.frame.payload);
  return result;
}

}  // namespace explore::link
