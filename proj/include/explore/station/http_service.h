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


#ifndef EXPLORE_STATION_HTTP_SERVICE_H_
#define EXPLORE_STATION_HTTP_SERVICE_H_

#include <atomic>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "absl/status/statusor.h"
#include "explore/station/station.h"

namespace httplib {
class Server;
}

namespace explore::station {

// HTTP front end of a Station:
//
//   GET  /api/v1/snapshot          full state as JSON
//   POST /api/v1/commands          {"client", "kind", "vx", "vy", "x", "y"}
//   POST /api/v1/driver/release    {"client"}
//   GET  /api/v1/events[?since=N]  text/event-stream; a "snapshot" event
//                                  first, then every event with id > N (or
//                                  > the snapshot's id when N is absent).
//                                  `once=1` closes after the backlog.
//
// The station is shared with whatever advances it; every access holds `mu`.
// Call Notify() after changing the station so that open streams wake up.
class HttpService {
 public:
  HttpService(Station* station, std::mutex* mu);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Binds (port 0 picks a free port) and serves on a background thread.
  // Returns the bound port.
  absl::StatusOr<int> Start(const std::string& host, int port);
  void Stop();
  void Notify();

 private:
  void Install();

  Station* station_;
  std::mutex* mu_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::mutex wake_mu_;
  std::condition_variable wake_;
  uint64_t generation_ = 0;
  std::atomic<bool> stopping_{false};
};

// Maps a command result to the HTTP status code the service answers with.
int HttpStatusFor(CommandStatus status);

}  // namespace explore::station

#endif  // EXPLORE_STATION_HTTP_SERVICE_H_
