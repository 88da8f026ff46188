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


#include "explore/station/http_service.h"

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "httplib.h"

namespace explore::station {
namespace {

using nlohmann::json;

constexpr auto kStreamPoll = std::chrono::milliseconds(250);
// Comment lines keep idle streams (and proxies) from timing out.
constexpr int kKeepAlivePolls = 20;

std::string SseMessage(uint64_t id, const std::string& type,
                       const json& data) {
  return "id: " + std::to_string(id) + "\nevent: " + type +
         "\ndata: " + data.dump() + "\n\n";
}

void ReplyJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

std::optional<double> NumberField(const json& body, const char* key) {
  auto it = body.find(key);
  if (it == body.end() || !it->is_number()) return std::nullopt;
  return it->get<double>();
}

}  // namespace

int HttpStatusFor(CommandStatus status) {
  switch (status) {
    case CommandStatus::kAccepted:
      return 202;
    case CommandStatus::kConflict:
      return 409;
    case CommandStatus::kEncodingFailure:
      return 422;
    case CommandStatus::kInvalid:
      return 400;
    case CommandStatus::kLinkFailure:
      return 503;
  }
  return 500;
}

HttpService::HttpService(Station* station, std::mutex* mu)
    : station_(station), mu_(mu), server_(std::make_unique<httplib::Server>()) {
  Install();
}

HttpService::~HttpService() { Stop(); }

void HttpService::Notify() {
  {
    std::lock_guard<std::mutex> lock(wake_mu_);
    ++generation_;
  }
  wake_.notify_all();
}

void HttpService::Install() {
  server_->set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  server_->Get("/api/v1/snapshot",
               [this](const httplib::Request&, httplib::Response& res) {
                 json snapshot;
                 {
                   std::lock_guard<std::mutex> lock(*mu_);
                   snapshot = station_->Snapshot();
                 }
                 ReplyJson(res, 200, snapshot);
               });

  server_->Post("/api/v1/commands", [this](const httplib::Request& req,
                                           httplib::Response& res) {
    const json body = json::parse(req.body, nullptr, /*allow_exceptions=*/false);
    if (!body.is_object()) {
      ReplyJson(res, 400,
                {{"status", "invalid"}, {"message", "body must be a JSON object"}});
      return;
    }
    const std::string client = body.value("client", "");
    const std::optional<CommandKind> kind =
        ParseCommandKind(body.value("kind", ""));
    if (!kind.has_value()) {
      ReplyJson(res, 400,
                {{"status", "invalid"},
                 {"message",
                  "kind must be drive, goto, resume_autonomy or stop"}});
      return;
    }
    OperatorCommand command;
    command.kind = *kind;
    if (*kind == CommandKind::kDrive) {
      auto vx = NumberField(body, "vx");
      auto vy = NumberField(body, "vy");
      if (!vx || !vy) {
        ReplyJson(res, 400,
                  {{"status", "invalid"}, {"message", "drive needs vx and vy"}});
        return;
      }
      command.velocity = {*vx, *vy};
    } else if (*kind == CommandKind::kGoto) {
      auto x = NumberField(body, "x");
      auto y = NumberField(body, "y");
      if (!x || !y) {
        ReplyJson(res, 400,
                  {{"status", "invalid"}, {"message", "goto needs x and y"}});
        return;
      }
      command.target = {*x, *y};
    }
    CommandResult result;
    {
      std::lock_guard<std::mutex> lock(*mu_);
      result = station_->Submit(client, command, station_->now());
    }
    Notify();
    json reply = {{"status", std::string(CommandStatusName(result.status))},
                  {"message", result.message}};
    if (result.seq.has_value()) reply["seq"] = *result.seq;
    ReplyJson(res, HttpStatusFor(result.status), reply);
  });

  server_->Post("/api/v1/driver/release", [this](const httplib::Request& req,
                                                 httplib::Response& res) {
    const json body = json::parse(req.body, nullptr, false);
    if (!body.is_object() || !body.contains("client")) {
      ReplyJson(res, 400, {{"status", "invalid"}, {"message", "client missing"}});
      return;
    }
    {
      std::lock_guard<std::mutex> lock(*mu_);
      station_->ReleaseDriver(body.value("client", ""), station_->now());
    }
    Notify();
    ReplyJson(res, 200, {{"status", "released"}});
  });

  server_->Get("/api/v1/events", [this](const httplib::Request& req,
                                        httplib::Response& res) {
    std::optional<uint64_t> since;
    if (req.has_param("since")) {
      try {
        since = std::stoull(req.get_param_value("since"));
      } catch (...) {
        ReplyJson(res, 400, {{"status", "invalid"}, {"message", "bad since"}});
        return;
      }
    }
    const bool once = req.get_param_value("once") == "1";
    res.set_header("Cache-Control", "no-cache");
    auto cursor = std::make_shared<std::optional<uint64_t>>(since);
    auto idle = std::make_shared<int>(0);
    auto first = std::make_shared<bool>(true);
    res.set_chunked_content_provider(
        "text/event-stream",
        [this, cursor, idle, first, once](size_t, httplib::DataSink& sink) {
          if (stopping_) {
            sink.done();
            return true;
          }
          uint64_t seen;
          {
            std::lock_guard<std::mutex> lock(wake_mu_);
            seen = generation_;
          }
          std::string out;
          {
            std::lock_guard<std::mutex> lock(*mu_);
            if (*first) {
              // Every attach, reconnects included, starts from a snapshot.
              const json snapshot = station_->Snapshot();
              const uint64_t id = snapshot["event_id"].get<uint64_t>();
              out += SseMessage(id, "snapshot", snapshot);
              if (!cursor->has_value()) *cursor = id;
              *first = false;
            }
            for (const Event& e : station_->EventsAfter(**cursor)) {
              out += SseMessage(e.id, e.type, e.data);
              *cursor = e.id;
            }
          }
          if (!out.empty()) {
            *idle = 0;
            if (!sink.write(out.data(), out.size())) return false;
          }
          if (once) {
            sink.done();
            return true;
          }
          if (out.empty() && ++*idle >= kKeepAlivePolls) {
            *idle = 0;
            static const std::string kKeepAlive = ": keep-alive\n\n";
            if (!sink.write(kKeepAlive.data(), kKeepAlive.size())) return false;
          }
          std::unique_lock<std::mutex> lock(wake_mu_);
          wake_.wait_for(lock, kStreamPoll, [this, seen] {
            return generation_ != seen || stopping_.load();
          });
          return true;
        });
  });
}

absl::StatusOr<int> HttpService::Start(const std::string& host, int port) {
  if (thread_.joinable()) {
    return absl::FailedPreconditionError("service already started");
  }
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
    if (bound < 0) return absl::UnavailableError("could not bind " + host);
  } else if (!server_->bind_to_port(host, port)) {
    return absl::UnavailableError("could not bind " + host + ":" +
                                  std::to_string(port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void HttpService::Stop() {
  stopping_ = true;
  Notify();
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace explore::station
