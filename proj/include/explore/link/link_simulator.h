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


#ifndef EXPLORE_LINK_LINK_SIMULATOR_H_
#define EXPLORE_LINK_LINK_SIMULATOR_H_

#include <cstdint>
#include <deque>
#include <functional>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "explore/common/random.h"
#include "explore/link/frame.h"

namespace explore::link {

struct LinkConfig {
  double loss_probability = 0.0;
  double latency = 0.5;          // seconds, added after the airtime
  double duty_cycle_max = 0.01;  // fraction of any sliding window
  double data_rate = 5470.0;     // bits per second
  double duty_window = 3600.0;   // seconds
  uint64_t seed = 1;
};

absl::Status ValidateLinkConfig(const LinkConfig& config);

// The fate of one transmission.
struct Transmission {
  double requested = 0.0;  // when the sender handed the frame over
  double start = 0.0;      // first bit on air (after any duty-cycle deferral)
  double airtime = 0.0;
  bool dropped = false;
  double delivery = 0.0;   // start + airtime + latency; unset when dropped

  double end() const { return start + airtime; }
};

// One direction of a half-duplex, duty-cycled radio link on a simulated
// clock. Transmissions never overlap: a frame waits for the channel and, if
// sending it now would push airtime in the trailing window over the duty
// budget, for the earliest instant at which it fits. Dropped frames still
// spend their airtime. Not thread-safe; the owner serializes access.
class LinkSimulator {
 public:
  static absl::StatusOr<LinkSimulator> Create(const LinkConfig& config);

  // Queues raw bytes; fails only if the frame alone exceeds the duty budget
  // or `now` is not finite.
  absl::StatusOr<Transmission> Send(std::vector<uint8_t> bytes, double now);
  absl::StatusOr<Transmission> SendFrame(const Frame& frame, double now);

  // Removes and returns every frame delivered at or before `now`, oldest
  // first.
  std::vector<std::vector<uint8_t>> Receive(double now);

  // Airtime spent inside [end - duty_window, end].
  double AirtimeInWindow(double end) const;

  double Airtime(size_t bytes) const {
    return static_cast<double>(bytes) * 8.0 / config_.data_rate;
  }
  const LinkConfig& config() const { return config_; }
  size_t in_flight() const { return queue_.size(); }
  uint64_t sent() const { return sent_; }
  uint64_t dropped() const { return dropped_; }

  // Called with every accepted transmission, dropped ones included.
  void set_observer(std::function<void(const Transmission&)> observer) {
    observer_ = std::move(observer);
  }

 private:
  struct Interval {
    double start;
    double end;
  };
  struct Pending {
    double delivery;
    std::vector<uint8_t> bytes;
  };

  explicit LinkSimulator(const LinkConfig& config)
      : config_(config), rng_(config.seed) {}

  double EarliestStart(double from, double airtime) const;

  LinkConfig config_;
  DeterministicRng rng_;
  std::deque<Interval> history_;  // transmissions still inside a window
  std::deque<Pending> queue_;
  uint64_t sent_ = 0;
  uint64_t dropped_ = 0;
  std::function<void(const Transmission&)> observer_;
};

}  // namespace explore::link

#endif  // EXPLORE_LINK_LINK_SIMULATOR_H_
