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

#ifndef TPATHS_PACKING_H_
#define TPATHS_PACKING_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpaths/multigraph.h"

namespace tpaths {

// lambda(t, T - t); zero when t is the only terminal.
int terminal_lambda(const Multigraph& g, const TerminalSet& t, VertexId s);

// True iff delta(s) can be covered by edge-disjoint T-paths, i.e.
// lambda(s, T - s) == d(s).
bool linkability_check(const Multigraph& g, const TerminalSet& t, VertexId s);

// One splitting-off step at the common inner vertex of `first` and `second`.
// When `replacement` is empty the two edges were a parallel pair hanging on a
// degree-two vertex and were deleted instead.
struct SplitRecord {
  VertexId vertex = 0;
  EdgeId first = 0;
  EdgeId second = 0;
  VertexId first_end = 0;   // end of `first` other than `vertex`
  VertexId second_end = 0;  // end of `second` other than `vertex`
  std::optional<EdgeId> replacement;

  friend bool operator==(const SplitRecord&, const SplitRecord&) = default;
};

struct SplitResult {
  Multigraph graph;
  SplitRecord record;
};

// Replaces e = xv and f = vy by a new edge xy (id one above the current
// maximum). Requires v to be an inner vertex and x != y.
SplitResult split_off(const Multigraph& g, const TerminalSet& t, EdgeId e,
                      EdgeId f);

// Whether split_off(g, t, e, f) keeps lambda(s, T - s) for every terminal.
bool is_admissible(const Multigraph& g, const TerminalSet& t, EdgeId e,
                   EdgeId f);

struct CompleteSplitting {
  Multigraph terminal_graph;  // vertices: T only; every edge joins two of them
  std::vector<SplitRecord> records;
};

// Splits off every inner vertex completely. Requires G inner Eulerian and
// linkable at every terminal (run wave elimination first).
CompleteSplitting complete_splitting(const Multigraph& g,
                                     const TerminalSet& t);

// Expands every terminal-graph edge back through the split records. Each
// result path is a T-path of the graph the splitting started from.
PathSystem lift_paths(const std::vector<SplitRecord>& records,
                      const Multigraph& terminal_graph);

// Solution of the packing problem with its optimality witness: for every
// terminal a cut separating it from the other terminals that holds exactly
// one edge of every path ending at it.
struct PackingCertificate {
  PathSystem paths;
  std::map<VertexId, Cut> cuts;

  // For terminal t: (path index, chosen edge) for every path ending at t.
  std::map<VertexId, std::vector<std::pair<int, EdgeId>>> choices() const;
};

// Full pipeline: peel edges between terminals, eliminate waves at every
// terminal, split off completely, lift the paths back. Throws if G is not
// inner Eulerian.
PackingCertificate solve(const Multigraph& g, const TerminalSet& t);

struct VerifyResult {
  bool ok = true;
  std::string reason;  // machine-readable code, empty when ok
  std::string detail;

  explicit operator bool() const { return ok; }
};

// Rechecks every certificate invariant from scratch.
VerifyResult verify_certificate(const Multigraph& g, const TerminalSet& t,
                                const PackingCertificate& cert);

// A T-path through e (with e at terminal s) whose removal keeps every
// terminal linkable. Searches shortest paths first.
Path removable_tpath(const Multigraph& g, const TerminalSet& t, VertexId s,
                     EdgeId e);

// If every edge-disjoint system covering delta(s) towards `targets` uses e,
// returns the s-tight cut through e; otherwise nullopt ("not obligatory").
// Requires lambda(s, targets) == d(s) and e not at s.
std::optional<Cut> tight_cut(const Multigraph& g, VertexId s,
                             const VertexSet& targets, EdgeId e);

}  // namespace tpaths

#endif  // TPATHS_PACKING_H_
