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

#include "tpaths/closure.h"

#include <map>
#include <string>

#include "tpaths/error.h"
#include "tpaths/menger.h"
#include "tpaths/packing.h"

namespace tpaths {

ClosureSystem build_closure_system(const Multigraph& g, const TerminalSet& t) {
  if (!is_inner_eulerian(g, t).inner_eulerian) {
    throw Error(Errc::kPrecondition, "graph is not inner Eulerian");
  }
  ClosureSystem sys;
  for (EdgeId e : g.edge_ids()) sys.edges.insert(e);
  if (t.empty()) {
    for (const DecompositionPart& part : eulerian_decomposition(g, t)) {
      sys.cycles.emplace_back(part.path.edges.begin(), part.path.edges.end());
    }
    return sys;
  }

  for (const Edge& e : g.edges()) {
    if (t.contains(e.u) && t.contains(e.v)) sys.cycles.push_back({e.id});
  }
  ContractionFamily family;
  family.parts[*t.as_set().begin()] = t.as_set();
  const Multigraph shrunk = contract(g, family);
  for (const DecompositionPart& part :
       eulerian_decomposition(shrunk, TerminalSet{})) {
    sys.cycles.emplace_back(part.path.edges.begin(), part.path.edges.end());
  }

  for (VertexId s : t.ids()) {
    if (g.degree(s) <= 1) continue;
    if (!linkability_check(g, t, s)) {
      throw Error(Errc::kPrecondition,
                  "linkability fails at terminal " + g.name(s));
    }
    FlowResult flow = max_disjoint_paths(g, {s}, t.others(s));
    for (const Path& p : flow.paths) {
      sys.witnesses.emplace_back(p.edges.begin(), p.edges.end());
    }
  }
  return sys;
}

void validate_closure_system(const ClosureSystem& sys) {
  EdgeSet seen;
  for (const EdgeSet& o : sys.cycles) {
    for (EdgeId e : o) {
      if (!sys.edges.count(e)) {
        throw Error(Errc::kInvalidArgument,
                    "cycle member uses unknown edge " + std::to_string(e));
      }
      if (!seen.insert(e).second) {
        throw Error(Errc::kInvalidArgument,
                    "cycle members overlap at edge " + std::to_string(e));
      }
    }
  }
  if (seen != sys.edges) {
    throw Error(Errc::kInvalidArgument, "cycle members do not cover E");
  }
  for (const EdgeSet& w : sys.witnesses) {
    for (EdgeId e : w) {
      if (!sys.edges.count(e)) {
        throw Error(Errc::kInvalidArgument,
                    "witness uses unknown edge " + std::to_string(e));
      }
    }
  }
}

EdgeSet c_close(const ClosureSystem& sys, const EdgeSet& f0) {
  for (EdgeId e : f0) {
    if (!sys.edges.count(e)) {
      throw Error(Errc::kUnknownEdge, "edge " + std::to_string(e));
    }
  }
  // Edge -> members containing it, so each member is absorbed once.
  std::vector<const EdgeSet*> members;
  for (const EdgeSet& o : sys.cycles) members.push_back(&o);
  for (const EdgeSet& w : sys.witnesses) members.push_back(&w);
  std::map<EdgeId, std::vector<int>> at;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    for (EdgeId e : *members[i]) at[e].push_back(i);
  }
  EdgeSet closed = f0;
  std::vector<EdgeId> frontier(f0.begin(), f0.end());
  std::vector<bool> absorbed(members.size(), false);
  while (!frontier.empty()) {
    EdgeId e = frontier.back();
    frontier.pop_back();
    for (int i : at[e]) {
      if (absorbed[i]) continue;
      absorbed[i] = true;
      for (EdgeId f : *members[i]) {
        if (closed.insert(f).second) frontier.push_back(f);
      }
    }
  }
  return closed;
}

std::vector<EdgeSet> closed_partition(const ClosureSystem& sys) {
  std::vector<EdgeSet> pieces;
  EdgeSet covered;
  for (EdgeId e : sys.edges) {
    if (covered.count(e)) continue;
    EdgeSet piece = c_close(sys, {e});
    covered.insert(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

}  // namespace tpaths
