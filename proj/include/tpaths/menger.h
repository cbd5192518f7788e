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

#ifndef TPATHS_MENGER_H_
#define TPATHS_MENGER_H_

#include <string>
#include <variant>

#include "tpaths/multigraph.h"

namespace tpaths {

// Maximum system of edge-disjoint AB-paths with a minimum AB-cut that meets
// every path exactly once.
struct FlowResult {
  PathSystem paths;
  Cut cut;  // the smallest minimum cut (source side residual-reachable)
  bool orthogonal = false;
};

// Validates an AB-path system: simple paths, pairwise edge-disjoint, first
// vertex in A, last in B, no inner vertex in A or B. Empty string if valid.
std::string check_ab_paths(const Multigraph& g, const VertexSet& a,
                           const VertexSet& b, const PathSystem& paths);

// Whether `cut` holds exactly one edge of every path and nothing else.
bool is_orthogonal(const Cut& cut, const PathSystem& paths);

// A must be nonempty and disjoint from B. An empty B (or a B unreachable
// from A) gives the empty flow.
FlowResult max_disjoint_paths(const Multigraph& g, const VertexSet& a,
                              const VertexSet& b);

int lambda(const Multigraph& g, const VertexSet& a, const VertexSet& b);
int lambda(const Multigraph& g, VertexId s, VertexId t);

// The lattice extremes of the minimum AB-cuts under source-side inclusion.
// Sides live inside the components that meet A or B.
Cut min_cut_smallest(const Multigraph& g, const VertexSet& a,
                     const VertexSet& b);
Cut min_cut_largest(const Multigraph& g, const VertexSet& a,
                    const VertexSet& b);

// Whether delta(cut.side) == cut.edges is a minimum AB-cut.
bool is_minimum_cut(const Multigraph& g, const VertexSet& a,
                    const VertexSet& b, const Cut& cut);

// delta(X1 & X2) and delta(X1 | X2). Both inputs must be minimum AB-cuts.
Cut cut_meet(const Multigraph& g, const VertexSet& a, const VertexSet& b,
             const Cut& c1, const Cut& c2);
Cut cut_join(const Multigraph& g, const VertexSet& a, const VertexSet& b,
             const Cut& c1, const Cut& c2);

// A single augmentation step: either a system with one more path whose
// end-edge sets strictly contain the old ones, or a cut orthogonal to `p`.
std::variant<PathSystem, Cut> augment_once(const Multigraph& g,
                                           const VertexSet& a,
                                           const VertexSet& b,
                                           const PathSystem& p);

// Edge-disjoint st-path system R with delta_R(s) containing delta_P(s) and
// delta_R(t) containing delta_Q(t).
PathSystem pym_merge(const Multigraph& g, VertexId s, VertexId t,
                     const PathSystem& p, const PathSystem& q);

// First edges at s (resp. last edges at t) of a path system.
EdgeSet start_edges(const PathSystem& paths);
EdgeSet end_edges(const PathSystem& paths);

}  // namespace tpaths

#endif  // TPATHS_MENGER_H_
