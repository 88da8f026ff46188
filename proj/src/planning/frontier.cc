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

#include "explore/planning/frontier.h"

#include <cstdlib>
#include <limits>

namespace explore::planning {

using geometry::Point2;

std::vector<Frontier> ExtractFrontiers(const LocalVertexSet& local) {
  struct Element {
    Point2 start;
    Point2 end;
  };
  std::vector<Element> elements;
  if (!local.fov_vertices.empty()) {
    const Point2 right = local.fov_vertices.front();
    elements.push_back({right, right});
  }
  for (const ObstacleCluster& cluster : local.obstacles) {
    if (cluster.vertices.empty()) continue;
    elements.push_back({cluster.vertices.front(), cluster.vertices.back()});
  }
  if (local.fov_vertices.size() > 1) {
    const Point2 left = local.fov_vertices.back();
    elements.push_back({left, left});
  }

  std::vector<Frontier> frontiers;
  for (size_t i = 0; i + 1 < elements.size(); ++i) {
    const Point2 p1 = elements[i].end;
    const Point2 p2 = elements[i + 1].start;
    const double width = geometry::Distance(p1, p2);
    if (width > 0.0) frontiers.push_back({p1, p2, width});
  }
  return frontiers;
}

bool PassesThrough(const Candidate& candidate, const Frontier& frontier,
                   double epsilon) {
  return PolylineDistance(candidate.polyline, {frontier.p1, frontier.p2}) <=
         epsilon;
}

int SelectFromScores(const std::vector<double>& scores,
                     const std::vector<bool>& feasible) {
  const int n = static_cast<int>(scores.size());
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    if (feasible[i] && scores[i] > best) best = scores[i];
  }
  if (best == -std::numeric_limits<double>::infinity()) return -1;

  // Twice the distance from a run's middle to the fan center, in indices.
  auto off_center = [n](int start, int length) {
    return std::abs(2 * start + length - 1 - (n - 1));
  };
  int best_start = -1;
  int best_length = 0;
  for (int i = 0; i < n;) {
    if (!(feasible[i] && scores[i] == best)) {
      ++i;
      continue;
    }
    int j = i;
    while (j < n && feasible[j] && scores[j] == best) ++j;
    const int length = j - i;
    if (length > best_length ||
        (length == best_length &&
         off_center(i, length) < off_center(best_start, best_length))) {
      best_start = i;
      best_length = length;
    }
    i = j;
  }
  return MiddleOfRun(best_start, best_length);
}

Selection ScoreAndSelect(const CandidateSet& candidates,
                         const std::vector<Frontier>& frontiers,
                         double epsilon) {
  const size_t n = candidates.candidates.size();
  Selection selection;
  selection.scores.assign(n, 0.0);
  std::vector<int> widest(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (!candidates.feasible[i]) continue;
    for (size_t f = 0; f < frontiers.size(); ++f) {
      if (frontiers[f].width > selection.scores[i] &&
          PassesThrough(candidates.candidates[i], frontiers[f], epsilon)) {
        selection.scores[i] = frontiers[f].width;
        widest[i] = static_cast<int>(f);
      }
    }
  }
  selection.index = SelectFromScores(selection.scores, candidates.feasible);
  if (selection.index < 0) return selection;

  if (widest[selection.index] >= 0) {
    selection.frontier = frontiers[widest[selection.index]];
  } else if (!frontiers.empty()) {
    const Point2 terminal = candidates.candidates[selection.index].terminal;
    double nearest = std::numeric_limits<double>::infinity();
    for (const Frontier& frontier : frontiers) {
      const double d =
          geometry::PointSegmentDistance(terminal, frontier.p1, frontier.p2);
      if (d < nearest) {
        nearest = d;
        selection.frontier = frontier;
      }
    }
  }
  return selection;
}

}  // namespace explore::planning
