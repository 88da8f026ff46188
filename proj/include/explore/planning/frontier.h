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

#ifndef EXPLORE_PLANNING_FRONTIER_H_
#define EXPLORE_PLANNING_FRONTIER_H_

#include <optional>
#include <vector>

#include "explore/geometry/vec2.h"
#include "explore/planning/candidates.h"
#include "explore/planning/local_vertices.h"

namespace explore::planning {

// A chord between the end of one sensed element and the start of the next;
// the gap across it is unknown space.
struct Frontier {
  geometry::Point2 p1;
  geometry::Point2 p2;
  double width = 0.0;
};

// Frontier chords of a vertex set, in bearing order. The sensed elements are
// the right FOV corner, each obstacle cluster, and the left FOV corner;
// consecutive elements contribute the chord from the end of the first to the
// start of the second. Zero-width chords are skipped.
std::vector<Frontier> ExtractFrontiers(const LocalVertexSet& local);

// True when the candidate contour comes within `epsilon` of the chord.
bool PassesThrough(const Candidate& candidate, const Frontier& frontier,
                   double epsilon);

struct Selection {
  int index = -1;  // into the candidate set; -1 when stuck
  std::optional<Frontier> frontier;
  std::vector<double> scores;  // per candidate; 0 for infeasible ones
};

// Index of the middle element of a run [start, start + length): the lower
// middle for even lengths.
inline int MiddleOfRun(int start, int length) {
  return start + (length - 1) / 2;
}

// Picks, among feasible candidates with the best score, the middle of the
// largest contiguous run. Equal-length runs are broken by the one nearest the
// fan center, then the lower index. Generic over precomputed scores so the
// rule can be exercised on its own.
int SelectFromScores(const std::vector<double>& scores,
                     const std::vector<bool>& feasible);

// Scores each feasible candidate by the widest frontier chord it passes
// through and selects per SelectFromScores. Returns index -1 when no
// candidate is feasible. The selected candidate's frontier is the widest one
// it passes, or the chord closest to its terminal point if it passes none.
Selection ScoreAndSelect(const CandidateSet& candidates,
                         const std::vector<Frontier>& frontiers,
                         double epsilon);

}  // namespace explore::planning

#endif  // EXPLORE_PLANNING_FRONTIER_H_
