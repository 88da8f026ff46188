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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "explore/cli/commands.h"
#include "explore/cli/exports.h"
#include "explore/cli/report.h"
#include "explore/sim/trace.h"
#include "gtest/gtest.h"
#include "json.hpp"

namespace explore::cli {
namespace {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path Fixture(const std::string& name) {
  return fs::path(EXPLORE_FIXTURES_DIR) / "traces" / name;
}

sim::Trace LoadTrace(const std::string& name) {
  auto trace = sim::ParseTrace(ReadFile(Fixture(name)));
  EXPECT_TRUE(trace.ok()) << trace.status();
  return *trace;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("explore_cli_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter_++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(LoadScenarioTest, BuiltinAndFile) {
  auto builtin = LoadScenario("tunnel-open");
  ASSERT_TRUE(builtin.ok()) << builtin.status();
  EXPECT_EQ(builtin->name, "tunnel-open");

  TempDir dir;
  const fs::path file = dir.path() / "my-room.scn";
  std::ofstream(file) << *sim::BuiltinScenarioText("open-field");
  auto loaded = LoadScenario(file.string());
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(loaded->name, "my-room");

  EXPECT_FALSE(LoadScenario("no-such-scenario").ok());
}

TEST(RunCommandTest, ConfigErrorsExitTwo) {
  TempDir dir;
  const fs::path bad = dir.path() / "bad.scn";
  std::ofstream(bad) << "[world]\nboundary = 0,0 1,0\n[robot]\nv_max = fast\n";
  std::ostringstream out, err;
  EXPECT_EQ(RunCommand({.scenario = bad.string()}, out, err), kExitConfigError);
  EXPECT_FALSE(err.str().empty());

  RunOptions negative{.scenario = "open-field"};
  negative.overrides.plan_hz = -1;
  negative.out_dir = (dir.path() / "x").string();
  EXPECT_EQ(RunCommand(negative, out, err), kExitConfigError);
}

TEST(RunCommandTest, WritesArtifactsUnderOutputRoot) {
  TempDir dir;
  ::setenv(kOutputRootEnv, dir.path().c_str(), 1);
  RunOptions options{.scenario = "sealed-corridor"};
  std::ostringstream out, err;
  EXPECT_EQ(RunCommand(options, out, err), kExitOk) << err.str();
  ::unsetenv(kOutputRootEnv);

  const fs::path run_dir = dir.path() / "sealed-corridor";
  for (const char* f : {"trace.txt", "report.json", "point_map.xyz"}) {
    EXPECT_TRUE(fs::exists(run_dir / f)) << f;
  }
  const nlohmann::json report =
      nlohmann::json::parse(ReadFile(run_dir / "report.json"));
  EXPECT_EQ(report["scenario"], "sealed-corridor");
  EXPECT_EQ(report["outcome"], "stuck");
  EXPECT_TRUE(report.contains("metadata"));

  // The written trace replays.
  std::ostringstream rout, rerr;
  EXPECT_EQ(ReplayCommand((run_dir / "trace.txt").string(), rout, rerr),
            kExitOk)
      << rerr.str();
}

TEST(RunCommandTest, ExplicitOutDirAndOverrides) {
  TempDir dir;
  RunOptions options{.scenario = "sealed-corridor"};
  options.out_dir = (dir.path() / "custom").string();
  options.overrides.duration = 5;
  std::ostringstream out, err;
  // Cut short, the run no longer reaches its expected outcome.
  EXPECT_EQ(RunCommand(options, out, err), kExitUnexpectedOutcome);
  EXPECT_TRUE(fs::exists(dir.path() / "custom" / "trace.txt"));
}

TEST(FilterTest, KeepsEveryNth) {
  std::vector<MapPoint> points(250000);
  for (size_t i = 0; i < points.size(); ++i) points[i].x = i;
  const std::vector<MapPoint> kept = FilterEveryNth(points, 250);
  ASSERT_EQ(kept.size(), 1000u);
  EXPECT_EQ(kept[1].x, 250.0);
  EXPECT_EQ(FilterEveryNth(points, 1).size(), points.size());
  EXPECT_TRUE(FilterEveryNth(points, 0).empty());
}

TEST(ExportTest, TrajectoryTable) {
  const sim::Trace trace = LoadTrace("open-field.trace");
  const std::string table = TrajectoryTable(trace);
  EXPECT_EQ(table.substr(0, table.find('\n')),
            "tick,time,x,y,heading,decision,path_id");
  EXPECT_EQ(std::count(table.begin(), table.end(), '\n'),
            static_cast<long>(trace.records.size()) + 1);
}

TEST(ExportTest, PointMapIsSliceOfReturns) {
  const sim::Trace trace = LoadTrace("sealed-corridor.trace");
  auto points = PointMapFromTrace(trace);
  ASSERT_TRUE(points.ok()) << points.status();
  ASSERT_FALSE(points->empty());
  for (const MapPoint& p : *points) EXPECT_EQ(p.z, kSliceHeight);
}

TEST(ExportTest, FieldSvgNearTheWheel) {
  const sim::Trace trace = LoadTrace("tunnel-open.trace");
  int64_t tick = -1;
  for (const sim::TraceRecord& r : trace.records) {
    if (r.pose.position.x > 15.0 && r.path_id > 0) {
      tick = r.tick;
      break;
    }
  }
  ASSERT_GE(tick, 0);
  auto svg = FieldSvg(trace, tick);
  ASSERT_TRUE(svg.ok()) << svg.status();
  EXPECT_NE(svg->find("<svg"), std::string::npos);
  EXPECT_NE(svg->find("class=\"arrow\""), std::string::npos);
  EXPECT_NE(svg->find("<polyline class=\"contour\""), std::string::npos);
  EXPECT_NE(svg->find(".contour{fill:none;stroke:cyan"), std::string::npos);
  EXPECT_NE(svg->find("class=\"obstacle\""), std::string::npos);

  EXPECT_EQ(FieldSvg(trace, 1 << 30).status().code(),
            absl::StatusCode::kOutOfRange);
  std::ostringstream out, err;
  ExportOptions options{.kind = ExportKind::kFieldSvg,
                        .trace_path = Fixture("tunnel-open.trace").string(),
                        .tick = 1 << 30};
  EXPECT_EQ(ExportCommand(options, out, err), kExitConfigError);
}

TEST(ExportTest, ExportsAreByteReproducible) {
  TempDir dir;
  for (ExportKind kind : {ExportKind::kTrajectoryTable, ExportKind::kPointMap,
                          ExportKind::kFieldSvg}) {
    std::string first;
    for (int i = 0; i < 2; ++i) {
      const fs::path out_path = dir.path() / ("out" + std::to_string(i));
      ExportOptions options{.kind = kind,
                            .trace_path = Fixture("tunnel-open.trace").string(),
                            .out_path = out_path.string(),
                            .tick = 400};
      std::ostringstream out, err;
      ASSERT_EQ(ExportCommand(options, out, err), kExitOk) << err.str();
      const std::string bytes = ReadFile(out_path);
      ASSERT_FALSE(bytes.empty());
      if (i == 0) {
        first = bytes;
      } else {
        EXPECT_EQ(bytes, first);
      }
    }
  }
}

TEST(ReplayTest, FixturesReplayExactly) {
  for (const char* name : {"open-field.trace", "tunnel-open.trace",
                           "sealed-corridor.trace",
                           "hallway-circuit-plan1-60s.trace"}) {
    std::ostringstream out, err;
    EXPECT_EQ(ReplayCommand(Fixture(name).string(), out, err), kExitOk)
        << name << ": " << err.str();
  }
}

TEST(ReplayTest, EditedPoseReportsTick) {
  sim::Trace trace = LoadTrace("sealed-corridor.trace");
  ASSERT_GT(trace.records.size(), 37u);
  trace.records[37].pose.position.x += 1e-3;
  TempDir dir;
  const fs::path edited = dir.path() / "edited.trace";
  std::ofstream(edited) << sim::FormatTrace(trace);
  std::ostringstream out, err;
  EXPECT_EQ(ReplayCommand(edited.string(), out, err), kExitReplayMismatch);
  EXPECT_NE((out.str() + err.str()).find("37"), std::string::npos)
      << out.str() << err.str();
}

TEST(ListScenariosTest, NamesBuiltins) {
  std::ostringstream out;
  EXPECT_EQ(ListScenariosCommand(out), kExitOk);
  for (const char* n : {"open-field", "tunnel-open", "hallway-circuit"}) {
    EXPECT_NE(out.str().find(n), std::string::npos) << n;
  }
}

}  // namespace
}  // namespace explore::cli
