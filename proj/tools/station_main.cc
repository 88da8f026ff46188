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


// Runs a supervised mission in (scaled) real time and serves the base
// station's HTTP API, so an operator UI can watch and steer the robot.

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "explore/cli/commands.h"
#include "explore/station/http_service.h"
#include "explore/station/mission.h"

namespace {

std::atomic<bool> g_stop{false};

void OnSignal(int) { g_stop = true; }

}  // namespace

int main(int argc, char** argv) {
  std::string scenario_spec = "tunnel-open";
  std::string host = "127.0.0.1";
  int port = 8080;
  double speed = 1.0;
  double telemetry_period = 2.0;
  bool exit_when_done = false;

  CLI::App app{"Base station with a simulated robot"};
  app.add_option("--scenario", scenario_spec,
                 "Builtin scenario name or scenario file")
      ->capture_default_str();
  app.add_option("--host", host, "Listen address")->capture_default_str();
  app.add_option("--port", port, "Listen port (0 = any free port)")
      ->capture_default_str();
  app.add_option("--speed", speed, "Simulated seconds per wall second")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--telemetry-period", telemetry_period,
                 "Seconds between telemetry frames")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--exit-when-done", exit_when_done,
               "Stop serving once the run has ended");
  CLI11_PARSE(app, argc, argv);

  absl::StatusOr<explore::cli::NamedScenario> loaded =
      explore::cli::LoadScenario(scenario_spec);
  if (!loaded.ok()) {
    std::cerr << "error: " << loaded.status().message() << "\n";
    return explore::cli::kExitConfigError;
  }
  explore::station::MissionConfig config;
  config.telemetry_period = telemetry_period;
  absl::StatusOr<std::unique_ptr<explore::station::HeadlessMission>> mission =
      explore::station::HeadlessMission::Create(loaded->scenario, config);
  if (!mission.ok()) {
    std::cerr << "error: " << mission.status().message() << "\n";
    return explore::cli::kExitConfigError;
  }

  std::mutex mu;
  explore::station::HttpService http(&(*mission)->station(), &mu);
  absl::StatusOr<int> bound = http.Start(host, port);
  if (!bound.ok()) {
    std::cerr << "error: " << bound.status().message() << "\n";
    return explore::cli::kExitConfigError;
  }
  std::cout << "serving " << loaded->name << " on http://" << host << ":"
            << *bound << "/api/v1/snapshot" << std::endl;

  std::signal(SIGINT, OnSignal);
  std::signal(SIGTERM, OnSignal);

  const double dt = (*mission)->simulation().dt();
  const auto wall_start = std::chrono::steady_clock::now();
  bool announced = false;
  int rc = 0;
  while (!g_stop) {
    const double wall = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - wall_start)
                            .count();
    const double target = wall * speed;
    {
      std::lock_guard<std::mutex> lock(mu);
      if (!(*mission)->done()) {
        if (absl::Status s = (*mission)->AdvanceTo(target); !s.ok()) {
          std::cerr << "error: " << s.message() << "\n";
          rc = 1;
          break;
        }
      } else {
        // Keep the station's clock (and heartbeats) running after the end.
        (*mission)->station().Tick(target);
      }
    }
    http.Notify();
    if ((*mission)->done() && !announced) {
      announced = true;
      std::cout << "run ended: "
                << explore::sim::OutcomeName(
                       *(*mission)->simulation().outcome())
                << " at t=" << (*mission)->time() << " s" << std::endl;
      if (exit_when_done) break;
    }
    std::this_thread::sleep_for(
        std::chrono::duration<double>(std::max(dt / speed, 0.001)));
  }
  http.Stop();
  return rc;
}
