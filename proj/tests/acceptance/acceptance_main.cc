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


// Acceptance run: one PASS/FAIL line per end-to-end criterion. Tolerances
// and time budgets are pinned below; the exit status is non-zero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "absl/strings/str_format.h"
#include "explore/cli/commands.h"
#include "explore/cli/exports.h"
#include "explore/cli/report.h"
#include "explore/common/random.h"
#include "explore/geometry/guidance_field.h"
#include "explore/geometry/path_function.h"
#include "explore/link/crc16.h"
#include "explore/link/frame.h"
#include "explore/link/link_simulator.h"
#include "explore/planning/frontier.h"
#include "explore/planning/local_vertices.h"
#include "explore/sim/simulation.h"
#include "explore/sim/trace.h"
#include "explore/station/mission.h"
#include "support/frame_gen.h"
#include "support/oracles.h"

namespace explore {
namespace {

using geometry::OrbitDirection;
using geometry::PathFunction;
using geometry::Point2;
using geometry::SplineCoeffs;
using geometry::Vec2;

constexpr double kPi = std::numbers::pi;

// Budgets (wall-clock seconds) and tolerances.
constexpr double kStraightLineBudget = 10.0;
constexpr double kMiddleSelectionBudget = 1.0;
constexpr double kConvergenceBudget = 30.0;
constexpr double kConvergenceTolerance = 1e-2;
constexpr double kConvergenceStep = 1e-3;
constexpr int kConvergencePaths = 100;
constexpr int kConvergenceStartsPerPath = 5;
constexpr double kGradientTolerance = 1e-6;
constexpr double kGradientFdStep = 1e-5;
constexpr int kGradientSamples = 1000;
constexpr int kClusterClouds = 500;
constexpr int kClusterMaxPoints = 200;
constexpr double kTunnelBudget = 60.0;
constexpr double kTunnelStuckX = 50.0;
constexpr double kTunnelStuckTolerance = 5.0;
constexpr double kWheelX = 17.5;
constexpr double kHallwayBudget = 120.0;
constexpr double kHallwayCoverage = 0.95;
constexpr int kProtocolFrames = 1000000;
constexpr int kFuzzInputs = 1000000;
constexpr int kBitFlipFrames = 100;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       since)
      .count();
}

absl::StatusOr<sim::Scenario> Builtin(const std::string& name,
                                      std::optional<double> plan_hz = {}) {
  absl::StatusOr<cli::NamedScenario> named = cli::LoadScenario(name);
  if (!named.ok()) return named.status();
  cli::RunOverrides overrides;
  overrides.plan_hz = plan_hz;
  if (absl::Status s = cli::ApplyOverrides(overrides, &named->scenario);
      !s.ok()) {
    return s;
  }
  return named->scenario;
}

// ------------------------------------------------------------- criteria

Verdict StraightLineOptimum() {
  auto scenario = Builtin("open-field");
  if (!scenario.ok()) return {false, scenario.status().ToString()};
  auto simulation = sim::Simulation::Create(*scenario);
  if (!simulation.ok()) return {false, simulation.status().ToString()};
  int plans = 0, bent = 0;
  (*simulation)->set_observer([&](const sim::TickEvent& e) {
    if (e.plan == nullptr || !e.plan->path.has_value()) return;
    ++plans;
    if (!(e.plan->path->coeffs() == SplineCoeffs{})) ++bent;
  });
  if (absl::Status s = (*simulation)->Run(); !s.ok()) {
    return {false, s.ToString()};
  }
  return {plans > 0 && bent == 0,
          absl::StrFormat("%d planning outputs, %d with non-zero coefficients",
                          plans, bent)};
}

Verdict MiddleSelection() {
  // The worked example: five equal feasible candidates select the third.
  const int example =
      planning::SelectFromScores({1, 1, 1, 1, 1}, std::vector<bool>(5, true));
  DeterministicRng rng(605);
  int trials = 0, wrong = 0;
  for (int n = 1; n <= 15; ++n) {
    for (int rep = 0; rep < 400; ++rep) {
      const int before = static_cast<int>(rng.NextU64() % 5);
      const int after = static_cast<int>(rng.NextU64() % 5);
      const double best = rng.Uniform(0.5, 10);
      std::vector<double> scores;
      std::vector<bool> feasible;
      auto filler = [&] {
        // Lower-scored or infeasible neighbours; infeasible ones may even
        // carry the best score.
        const bool ok = rng.Uniform01() < 0.5;
        feasible.push_back(ok);
        scores.push_back(ok ? rng.Uniform(0, best * 0.99) : best);
      };
      for (int i = 0; i < before; ++i) filler();
      for (int i = 0; i < n; ++i) {
        scores.push_back(best);
        feasible.push_back(true);
      }
      for (int i = 0; i < after; ++i) filler();
      ++trials;
      if (planning::SelectFromScores(scores, feasible) !=
          before + (n + 1) / 2 - 1) {
        ++wrong;
      }
    }
  }
  return {example == 2 && wrong == 0,
          absl::StrFormat("5-run selects index %d (1-based %d); %d/%d random "
                          "runs off-middle",
                          example, example + 1, wrong, trials)};
}

Point2 Rk4Step(const PathFunction& path, Point2 p, double h) {
  const Vec2 k1 = geometry::GuidanceField(path, p);
  const Vec2 k2 = geometry::GuidanceField(path, p + (h / 2) * k1);
  const Vec2 k3 = geometry::GuidanceField(path, p + (h / 2) * k2);
  const Vec2 k4 = geometry::GuidanceField(path, p + h * k3);
  return p + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Verdict FieldConvergence() {
  DeterministicRng rng(606);
  int runs = 0, failed = 0, non_monotone = 0;
  double worst_final = 0.0;
  int longest = 0;
  for (double rate : {0.05, 0.1, 0.4}) {
    for (int i = 0; i < kConvergencePaths; ++i) {
      const SplineCoeffs coeffs{0, rng.Uniform(-0.5, 0.5), rng.Uniform(-1, 1),
                                rng.Uniform(-1, 1)};
      const auto direction = i % 2 == 0 ? OrbitDirection::kCounterclockwise
                                        : OrbitDirection::kClockwise;
      auto path = PathFunction::Create(
          {rng.Uniform(-5, 5), rng.Uniform(-5, 5)}, rng.Uniform(-kPi, kPi),
          coeffs, direction, rate);
      if (!path.ok()) return {false, path.status().ToString()};
      for (int s = 0; s < kConvergenceStartsPerPath; ++s) {
        // Offsets span [-1, 1] including both ends, so |phi(p0)| <= 1.
        const double offset =
            s == 0 ? 1.0 : s == 1 ? -1.0 : rng.Uniform(-1, 1);
        const double along = rng.Uniform(-2, 2);
        Point2 p = path->ToWorld({along, path->Spline(along) + offset});
        double value = std::abs(path->Eval(p));
        int steps = 0;
        bool monotone = true;
        while (value >= kConvergenceTolerance && steps < 1000000) {
          p = Rk4Step(*path, p, kConvergenceStep);
          const double next = std::abs(path->Eval(p));
          if (next >= value) monotone = false;
          value = next;
          ++steps;
        }
        ++runs;
        if (value >= kConvergenceTolerance) ++failed;
        if (!monotone) ++non_monotone;
        worst_final = std::max(worst_final, value);
        longest = std::max(longest, steps);
      }
    }
  }
  return {failed == 0 && non_monotone == 0,
          absl::StrFormat("%d integrations, %d unconverged, %d non-monotone, "
                          "worst final |phi| %.2e, longest %d steps",
                          runs, failed, non_monotone, worst_final, longest)};
}

Verdict GradientCheck() {
  DeterministicRng rng(607);
  double worst = 0.0;
  for (int i = 0; i < kGradientSamples; ++i) {
    const SplineCoeffs coeffs{rng.Uniform(-0.1, 0.1), rng.Uniform(-0.5, 0.5),
                              rng.Uniform(-1, 1), rng.Uniform(-1, 1)};
    auto path = PathFunction::Create(
        {rng.Uniform(-20, 20), rng.Uniform(-20, 20)}, rng.Uniform(-kPi, kPi),
        coeffs,
        rng.Uniform01() < 0.5 ? OrbitDirection::kCounterclockwise
                              : OrbitDirection::kClockwise,
        rng.Uniform(0.05, 0.4));
    if (!path.ok()) return {false, path.status().ToString()};
    const Point2 p = path->ToWorld({rng.Uniform(-6, 6), rng.Uniform(-6, 6)});
    const Vec2 g = path->Gradient(p);
    const double h = kGradientFdStep;
    const Vec2 fd{
        (path->Eval({p.x + h, p.y}) - path->Eval({p.x - h, p.y})) / (2 * h),
        (path->Eval({p.x, p.y + h}) - path->Eval({p.x, p.y - h})) / (2 * h)};
    worst = std::max(worst, geometry::Norm(g - fd) / geometry::Norm(g));
  }
  return {worst < kGradientTolerance,
          absl::StrFormat("%d samples, worst relative error %.2e",
                          kGradientSamples, worst)};
}

Verdict ClusteringOracle() {
  DeterministicRng rng(608);
  const planning::FovConfig fov{43.5 * kPi / 180.0, 6.0};
  int mismatches = 0;
  for (int trial = 0; trial < kClusterClouds; ++trial) {
    const int n = 1 + static_cast<int>(rng.NextU64() % kClusterMaxPoints);
    planning::PointCloud cloud;
    double r = rng.Uniform(0.3, 6.5);
    for (int i = 0; i < n; ++i) {
      r = rng.Uniform01() < 0.15
              ? rng.Uniform(0.3, 6.5)
              : std::clamp(r + rng.Uniform(-0.2, 0.2), 0.1, 6.5);
      const double bearing =
          n == 1 ? 0.0 : -fov.half_angle + 2 * fov.half_angle * i / (n - 1);
      const bool free = r >= fov.max_range;
      const double range = free ? fov.max_range : r;
      cloud.returns.push_back(
          {{range * std::cos(bearing), range * std::sin(bearing)},
           range,
           bearing,
           free});
    }
    const double eps = rng.Uniform(0.05, 0.5);
    auto set = planning::ExtractVertices(cloud, eps, fov, {});
    if (!set.ok()) return {false, set.status().ToString()};
    std::vector<std::vector<int>> got;
    for (const planning::ObstacleCluster& c : set->obstacles) {
      std::vector<int> members = c.members;
      std::sort(members.begin(), members.end());
      got.push_back(members);
    }
    std::sort(got.begin(), got.end());
    if (got != oracle::SingleLinkage(cloud, eps)) ++mismatches;
  }
  return {mismatches == 0,
          absl::StrFormat("%d clouds, %d partitions differ", kClusterClouds,
                          mismatches)};
}

Verdict TunnelReproduction() {
  auto scenario = Builtin("tunnel-open");
  if (!scenario.ok()) return {false, scenario.status().ToString()};
  const auto start = std::chrono::steady_clock::now();
  auto simulation = sim::Simulation::Create(*scenario);
  if (!simulation.ok()) return {false, simulation.status().ToString()};
  cli::StatsCollector stats;
  const sim::World* world = &(*simulation)->world();
  int cw_near_wheel = 0, ccw_near_wheel = 0;
  double y_at_wheel = 0.0;
  bool seen_wheel = false;
  (*simulation)->set_observer([&](const sim::TickEvent& e) {
    stats.Observe(*world, e);
    const Point2 p = e.state.pose.position;
    if (!seen_wheel && p.x >= kWheelX) {
      seen_wheel = true;
      y_at_wheel = p.y;
    }
    if (e.plan != nullptr && e.plan->decision == planning::Decision::kNewPath &&
        e.plan->path.has_value() && p.x > kWheelX - 6 && p.x < kWheelX) {
      if (e.plan->path->direction() == OrbitDirection::kClockwise) {
        ++cw_near_wheel;
      } else {
        ++ccw_near_wheel;
      }
    }
  });
  if (absl::Status s = (*simulation)->Run(); !s.ok()) {
    return {false, s.ToString()};
  }
  stats.Finish(**simulation);
  const double wall = Seconds(start);
  const cli::RunStats& st = stats.stats();
  const bool stuck = (*simulation)->outcome() == sim::Outcome::kStuck;
  const double radius = scenario->robot_radius;
  const bool pass =
      st.min_clearance >= radius && st.collision_ticks == 0 && seen_wheel &&
      y_at_wheel < 0 && cw_near_wheel > 0 && stuck &&
      std::abs(st.final_pose.position.x - kTunnelStuckX) <=
          kTunnelStuckTolerance &&
      wall < kTunnelBudget;
  return {pass,
          absl::StrFormat(
              "clearance %.3f m (radius %.2f), y at wheel %.3f, cw/ccw paths "
              "near wheel %d/%d, outcome %s at x=%.2f, sim %.1f s, wall %.2f s",
              st.min_clearance, radius, y_at_wheel, cw_near_wheel,
              ccw_near_wheel,
              std::string(sim::OutcomeName(
                  (*simulation)->outcome().value_or(sim::Outcome::kTimeout))),
              st.final_pose.position.x, st.sim_time, wall)};
}

Verdict HallwayReproduction() {
  auto scenario = Builtin("hallway-circuit");
  if (!scenario.ok()) return {false, scenario.status().ToString()};
  auto result = cli::RunWithStats(*scenario);
  if (!result.ok()) return {false, result.status().ToString()};
  const cli::RunStats& st = result->stats;
  const bool complete = result->trace.outcome == sim::Outcome::kComplete;
  return {complete && st.coverage >= kHallwayCoverage &&
              st.collision_ticks == 0 && result->wall_seconds < kHallwayBudget,
          absl::StrFormat("outcome %s, coverage %.3f, collisions %d, "
                          "cw/ccw paths %d/%d, sim %.1f s, wall %.2f s",
                          std::string(sim::OutcomeName(result->trace.outcome.value_or(
                              sim::Outcome::kTimeout))),
                          st.coverage, st.collision_ticks, st.clockwise_paths,
                          st.counterclockwise_paths, st.sim_time,
                          result->wall_seconds)};
}

Verdict RateRobustness() {
  bool pass = true;
  std::string detail;
  for (const char* name : {"tunnel-open", "hallway-circuit"}) {
    for (double hz : {1.0, 10.0}) {
      auto scenario = Builtin(name, hz);
      if (!scenario.ok()) return {false, scenario.status().ToString()};
      auto result = cli::RunWithStats(*scenario);
      if (!result.ok()) return {false, result.status().ToString()};
      const int collisions = result->stats.collision_ticks;
      pass = pass && collisions == 0 &&
             result->trace.outcome != sim::Outcome::kCollision;
      absl::StrAppendFormat(
          &detail, "%s%s@%gHz: %s, %d collision ticks",
          detail.empty() ? "" : "; ", name, hz,
          std::string(sim::OutcomeName(
              result->trace.outcome.value_or(sim::Outcome::kTimeout))),
          collisions);
    }
  }
  return {pass, detail};
}

// Transmission schedules of the link simulator: random configurations with
// bursty senders, plus the two links of a full supervised mission.
bool DutyInvariant(std::string* detail) {
  DeterministicRng rng(612);
  int schedules = 0, violations = 0;
  auto check = [&](const std::vector<oracle::Airtime>& tx,
                   const link::LinkConfig& config) {
    ++schedules;
    if (oracle::WorstWindowAirtime(tx, config.duty_window) >
        config.duty_cycle_max * config.duty_window * (1 + 1e-9)) {
      ++violations;
    }
  };
  for (int schedule = 0; schedule < 40; ++schedule) {
    link::LinkConfig config;
    config.duty_window = rng.Uniform(5, 60);
    config.duty_cycle_max = rng.Uniform(0.01, 0.3);
    config.data_rate = rng.Uniform(300, 6000);
    config.loss_probability = rng.Uniform01() * 0.5;
    config.seed = schedule;
    auto sim_link = link::LinkSimulator::Create(config);
    if (!sim_link.ok()) return false;
    std::vector<oracle::Airtime> tx;
    double now = 0.0;
    for (int i = 0; i < 300; ++i) {
      now += rng.Uniform01() < 0.7 ? rng.Uniform(0, 0.05)
                                   : rng.Uniform(0, config.duty_window);
      auto t = sim_link->SendFrame(testing::RandomFrame(rng), now);
      if (t.ok()) tx.push_back({t->start, t->end()});
    }
    check(tx, config);
  }
  auto scenario = Builtin("tunnel-open");
  if (!scenario.ok()) return false;
  station::MissionConfig mission_config;
  auto mission = station::HeadlessMission::Create(*scenario, mission_config);
  if (!mission.ok()) return false;
  std::vector<oracle::Airtime> up, down;
  (*mission)->mutable_uplink().set_observer([&up](const link::Transmission& t) {
    up.push_back({t.start, t.end()});
  });
  (*mission)->mutable_downlink().set_observer(
      [&down](const link::Transmission& t) {
        down.push_back({t.start, t.end()});
      });
  if (!(*mission)->AdvanceTo(100.0).ok()) return false;
  for (int i = 0; i < 20; ++i) {
    (*mission)->station().Submit(
        "acceptance", station::OperatorCommand::Drive(0.1 * (i % 3), 0),
        (*mission)->time());
  }
  if (!(*mission)->AdvanceTo(120.0).ok()) return false;
  check(up, mission_config.uplink);
  check(down, mission_config.downlink);
  *detail = absl::StrFormat("duty cycle: %d schedules, %d over budget",
                            schedules, violations);
  return violations == 0;
}

Verdict Protocol() {
  DeterministicRng rng(612);
  int round_trip_errors = 0;
  for (int i = 0; i < kProtocolFrames; ++i) {
    const link::Frame frame = testing::RandomFrame(rng);
    auto bytes = link::EncodeFrame(frame);
    if (!bytes.ok()) {
      ++round_trip_errors;
      continue;
    }
    const link::DecodeResult r = link::DecodeFrame(*bytes);
    if (!r.ok() || !(r.frame == frame)) ++round_trip_errors;
  }
  // Any exception or crash counts as a fault; accepted inputs must be
  // canonical encodings.
  int fuzz_faults = 0;
  for (int i = 0; i < kFuzzInputs; ++i) {
    std::vector<uint8_t> b(rng.NextU64() % 260);
    for (auto& x : b) x = static_cast<uint8_t>(rng.NextU64());
    if (i % 2 == 0 && b.size() >= 4) {
      b.resize(b.size() - 2);
      const uint16_t crc = link::Crc16(b);
      b.push_back(static_cast<uint8_t>(crc >> 8));
      b.push_back(static_cast<uint8_t>(crc & 0xFF));
    }
    try {
      const link::DecodeResult r = link::DecodeFrame(b);
      if (r.ok()) {
        auto again = link::EncodeFrame(r.frame);
        if (!again.ok() || *again != b) ++fuzz_faults;
      }
    } catch (...) {
      ++fuzz_faults;
    }
  }
  int flips = 0, undetected = 0;
  for (int i = 0; i < kBitFlipFrames; ++i) {
    const std::vector<uint8_t> b = *link::EncodeFrame(testing::RandomFrame(rng));
    for (size_t bit = 0; bit < b.size() * 8; ++bit) {
      std::vector<uint8_t> c = b;
      c[bit / 8] ^= static_cast<uint8_t>(0x80 >> (bit % 8));
      ++flips;
      if (link::DecodeFrame(c).ok()) ++undetected;
    }
  }
  std::string duty;
  const bool duty_ok = DutyInvariant(&duty);
  return {round_trip_errors == 0 && fuzz_faults == 0 && undetected == 0 &&
              duty_ok,
          absl::StrFormat("%d round trips, %d mismatches; %d fuzz inputs, %d "
                          "faults; %d single-bit flips, %d accepted; %s",
                          kProtocolFrames, round_trip_errors, kFuzzInputs,
                          fuzz_faults, flips, undetected,
                          duty.empty() ? "duty check did not run" : duty)};
}

Verdict Determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(EXPLORE_FIXTURES_DIR) / "traces";
  std::vector<fs::path> traces;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".trace") traces.push_back(entry.path());
  }
  std::sort(traces.begin(), traces.end());
  int mismatched = 0;
  std::string names;
  for (const fs::path& path : traces) {
    std::ostringstream out, err;
    const int code = cli::ReplayCommand(path.string(), out, err);
    if (code != cli::kExitOk) {
      ++mismatched;
      names += " " + path.filename().string();
    }
  }
  return {!traces.empty() && mismatched == 0,
          absl::StrFormat("%d fixture traces, %d mismatched%s",
                          static_cast<int>(traces.size()), mismatched, names)};
}

struct Criterion {
  const char* name;
  std::function<Verdict()> run;
  double budget;  // wall seconds; 0 = none
};

}  // namespace
}  // namespace explore

int main() {
  using namespace explore;
  const std::vector<Criterion> criteria = {
      {"straight-line-optimum", StraightLineOptimum, kStraightLineBudget},
      {"middle-selection", MiddleSelection, kMiddleSelectionBudget},
      {"field-convergence", FieldConvergence, kConvergenceBudget},
      {"gradient-check", GradientCheck, 0},
      {"clustering-oracle", ClusteringOracle, 0},
      {"tunnel-open-reproduction", TunnelReproduction, 0},
      {"hallway-circuit-reproduction", HallwayReproduction, 0},
      {"rate-robustness", RateRobustness, 0},
      {"protocol", Protocol, 0},
      {"determinism", Determinism, 0},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = c.run();
    const double elapsed = Seconds(start);
    if (c.budget > 0 && elapsed >= c.budget) {
      v.pass = false;
      v.detail += absl::StrFormat(" [over budget %.0f s]", c.budget);
    }
    if (!v.pass) ++failed;
    std::printf("%s %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", c.name,
                v.detail.c_str(), elapsed);
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n",
              static_cast<int>(criteria.size()) - failed,
              static_cast<int>(criteria.size()));
  return failed == 0 ? 0 : 1;
}
