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


#include "explore/link/link_simulator.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_format.h"

namespace explore::link {
namespace {

// Slack for comparing accumulated airtime against the budget.
constexpr double kBudgetSlack = 1e-12;

}  // namespace

absl::Status ValidateLinkConfig(const LinkConfig& c) {
  if (!(c.loss_probability >= 0.0 && c.loss_probability <= 1.0)) {
    return absl::InvalidArgumentError("loss_probability must be in [0, 1]");
  }
  if (!(c.latency >= 0.0) || !std::isfinite(c.latency)) {
    return absl::InvalidArgumentError("latency must be finite and >= 0");
  }
  if (!(c.duty_cycle_max > 0.0 && c.duty_cycle_max <= 1.0)) {
    return absl::InvalidArgumentError("duty_cycle_max must be in (0, 1]");
  }
  if (!(c.data_rate > 0.0) || !std::isfinite(c.data_rate)) {
    return absl::InvalidArgumentError("data_rate must be positive");
  }
  if (!(c.duty_window > 0.0) || !std::isfinite(c.duty_window)) {
    return absl::InvalidArgumentError("duty_window must be positive");
  }
  return absl::OkStatus();
}

absl::StatusOr<LinkSimulator> LinkSimulator::Create(const LinkConfig& config) {
  if (absl::Status s = ValidateLinkConfig(config); !s.ok()) return s;
  return LinkSimulator(config);
}

double LinkSimulator::AirtimeInWindow(double end) const {
  const double begin = end - config_.duty_window;
  double total = 0.0;
  for (const Interval& iv : history_) {
    total += std::max(0.0, std::min(iv.end, end) - std::max(iv.start, begin));
  }
  return total;
}

// With every earlier transmission finished by the candidate start s, the
// busiest window containing the new frame is the one ending at s + airtime.
// Its old content, as a function of that window's left edge w, is constant
// across idle gaps and falls with slope one inside past transmissions, so the
// earliest legal w is found by walking the history once.
double LinkSimulator::EarliestStart(double from, double airtime) const {
  const double budget = config_.duty_cycle_max * config_.duty_window - airtime;
  double w = from + airtime - config_.duty_window;
  double load = 0.0;
  for (const Interval& iv : history_) {
    load += std::max(0.0, iv.end - std::max(iv.start, w));
  }
  if (load <= budget + kBudgetSlack) return from;
  for (const Interval& iv : history_) {
    if (iv.end <= w) continue;
    w = std::max(w, iv.start);
    const double span = iv.end - w;
    if (load - span <= budget + kBudgetSlack) {
      w += std::max(0.0, load - budget);
      break;
    }
    load -= span;
    w = iv.end;
  }
  return std::max(from, w + config_.duty_window - airtime);
}

absl::StatusOr<Transmission> LinkSimulator::Send(std::vector<uint8_t> bytes,
                                                 double now) {
  if (!std::isfinite(now)) {
    return absl::InvalidArgumentError("send time must be finite");
  }
  Transmission t;
  t.requested = now;
  t.airtime = Airtime(bytes.size());
  if (t.airtime > config_.duty_cycle_max * config_.duty_window) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "a %d-byte frame needs %.3f s of airtime, more than the whole duty "
        "budget",
        bytes.size(), t.airtime));
  }
  double from = now;
  if (!history_.empty()) from = std::max(from, history_.back().end);
  t.start = EarliestStart(from, t.airtime);

  history_.push_back({t.start, t.end()});
  while (!history_.empty() &&
         history_.front().end < t.start - config_.duty_window) {
    history_.pop_front();
  }

  ++sent_;
  t.dropped = rng_.Uniform01() < config_.loss_probability;
  if (t.dropped) {
    ++dropped_;
  } else {
    t.delivery = t.end() + config_.latency;
    queue_.push_back({t.delivery, std::move(bytes)});
  }
  if (observer_) observer_(t);
  return t;
}

absl::StatusOr<Transmission> LinkSimulator::SendFrame(const Frame& frame,
                                                      double now) {
  absl::StatusOr<std::vector<uint8_t>> bytes = EncodeFrame(frame);
  if (!bytes.ok()) return bytes.status();
  return Send(*std::move(bytes), now);
}

std::vector<std::vector<uint8_t>> LinkSimulator::Receive(double now) {
  std::vector<std::vector<uint8_t>> out;
  while (!queue_.empty() && queue_.front().delivery <= now) {
    out.push_back(std::move(queue_.front().bytes));
    queue_.pop_front();
  }
  return out;
}

}  // namespace explore::link
