// Copyright 2026 The tpaths Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TPATHS_WAVES_H_
#define TPATHS_WAVES_H_

#include <optional>
#include <vector>

#include "tpaths/multigraph.h"

namespace tpaths {

// Edge-disjoint paths leaving `root` whose last edges are exactly the edges
// of a minimal cut between root and the other terminals. `cut.side` is the
// root's side of that cut.
struct Wave {
  VertexId root = 0;
  PathSystem paths;
  Cut cut;

  // The wave made of the edges at the root.
  bool trivial() const {
    return cut.side.size() == 1 && cut.side.count(root) == 1;
  }
};

// Validates every wave invariant against G and T, including minimality of
// the cut and that `w.cut.side` is the root side of `w.cut.edges`.
bool is_wave(const Multigraph& g, const TerminalSet& t, VertexId s,
             const Wave& w);

// The wave whose cut is the largest (by root side inclusion) among all wave
// cuts at `s`. With a seed system of s(T-s)-paths the result additionally
// uses every first edge of the seed.
Wave large_wave(const Multigraph& g, const TerminalSet& t, VertexId s,
                const std::optional<PathSystem>& seed = std::nullopt);

struct EliminationStep {
  VertexId terminal = 0;
  Wave wave;               // computed in the graph before this step
  Multigraph graph_after;  // root side of the wave contracted to the terminal
};

struct EliminationRecord {
  Multigraph original;
  TerminalSet terminals;
  std::vector<EliminationStep> steps;

  const Multigraph& final_graph() const {
    return steps.empty() ? original : steps.back().graph_after;
  }
};

// Processes `order` (a duplicate-free subset of T) in the given order,
// contracting the root side of each terminal's large wave.
EliminationRecord wave_elimination(const Multigraph& g, const TerminalSet& t,
                                   const std::vector<VertexId>& order);

// Lifts a T-path system of the final graph back to the original graph by
// prepending the stored wave paths at every processed terminal.
PathSystem extend_through_waves(const EliminationRecord& record,
                                const PathSystem& paths);

}  // namespace tpaths

#endif  // TPATHS_WAVES_H_
