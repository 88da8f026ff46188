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


#ifndef EXPLORE_TESTS_SUPPORT_FRAME_GEN_H_
#define EXPLORE_TESTS_SUPPORT_FRAME_GEN_H_

#include <cstdint>
#include <string>

#include "explore/common/random.h"
#include "explore/link/frame.h"

namespace explore::testing {

// A uniformly random frame of a random kind, covering every field's full
// range. Telemetry notes stay within the frame budget.
inline link::Frame RandomFrame(DeterministicRng& rng) {
  auto u8 = [&rng] { return static_cast<uint8_t>(rng.NextU64()); };
  auto i16 = [&rng] { return static_cast<int16_t>(rng.NextU64()); };
  auto u16 = [&rng] { return static_cast<uint16_t>(rng.NextU64()); };
  auto i32 = [&rng] { return static_cast<int32_t>(rng.NextU64()); };
  link::Frame frame;
  frame.seq = u8();
  switch (rng.NextU64() % 5) {
    case 0:
      frame.payload = link::ControlPayload{i16(), i16()};
      break;
    case 1:
      frame.payload = link::PositionPayload{i32(), i32()};
      break;
    case 2:
      frame.payload = link::StuckPayload{i32(), i32(), i16()};
      break;
    case 3: {
      link::TelemetryPayload t{i32(), i32(), i16(), u8(), u16(), {}};
      // 2 header + 14 fixed + 2 CRC leaves 204 bytes of note.
      const size_t length = rng.NextU64() % 205;
      for (size_t i = 0; i < length; ++i) {
        t.note.push_back(static_cast<char>(u8()));
      }
      frame.payload = std::move(t);
      break;
    }
    default:
      frame.payload = link::AckPayload{u8(), u8()};
      break;
  }
  return frame;
}

}  // namespace explore::testing

#endif  // EXPLORE_TESTS_SUPPORT_FRAME_GEN_H_
