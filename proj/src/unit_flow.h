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

#ifndef TPATHS_SRC_UNIT_FLOW_H_
#define TPATHS_SRC_UNIT_FLOW_H_

#include <vector>

#include "tpaths/multigraph.h"

namespace tpaths::internal {

// Edge-disjoint path flow between two disjoint vertex sets of an undirected
// multigraph. Every edge carries at most one unit in one direction. Source
// and sink sets behave as if contracted: augmenting paths never enter a
// source vertex and stop at the first sink vertex they reach.
class UnitFlow {
 public:
  UnitFlow(const Multigraph& g, const VertexSet& sources,
           const VertexSet& sinks);

  // Loads an existing source-to-sink path system as the current flow.
  void load(const PathSystem& paths);

  // Orients one unit of flow along `e`, leaving `from`.
  void set_flow(EdgeId e, VertexId from);

  // One BFS augmentation; neighbours are scanned in ascending edge id.
  bool augment();

  // Augments to a maximum flow; returns its value.
  int saturate();

  int value() const;

  // Flow decomposition into simple source-to-sink paths. Flow cycles are
  // dropped.
  PathSystem decompose() const;

  // Residual reachability from the sources.
  VertexSet source_reachable() const;

  // Vertices that can reach a sink in the residual graph.
  VertexSet sink_coreachable() const;

 private:
  int index_of(EdgeId e) const;
  // +1 if traversing edge `i` from `x` follows the stored orientation u->v.
  int direction(int i, VertexId x) const;
  bool residual(int i, VertexId from) const;

  const Multigraph& g_;
  std::vector<bool> is_source_;
  std::vector<bool> is_sink_;
  std::vector<int> flow_;  // per edge index: +1 u->v, -1 v->u, 0 idle
  std::vector<std::vector<int>> adj_;  // per vertex: edge indices by id
};

}  // namespace tpaths::internal

#endif  // TPATHS_SRC_UNIT_FLOW_H_
