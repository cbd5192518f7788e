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

#include "tpaths/waves.h"

#include <map>

#include "tpaths/error.h"
#include "tpaths/menger.h"
#include "unit_flow.h"

namespace tpaths {
namespace {

void require_terminal(const Multigraph& g, const TerminalSet& t, VertexId s) {
  if (!t.contains(s)) {
    throw Error(Errc::kInvalidArgument,
                "vertex " + std::to_string(s) + " is not a terminal");
  }
  if (!g.has_vertex(s)) {
    throw Error(Errc::kUnknownVertex, "terminal id " + std::to_string(s));
  }
}

// Root side of `cut` as seen from `s`: its component after deleting the cut.
VertexSet side_from_edges(const Multigraph& g, VertexId s,
                          const EdgeSet& cut) {
  return g.without_edges(cut).component_of(s);
}

// Replaces the final vertex of each path by `sink`.
PathSystem redirect_ends(PathSystem paths, VertexId sink) {
  for (Path& p : paths) p.vertices.back() = sink;
  return paths;
}

}  // namespace

bool is_wave(const Multigraph& g, const TerminalSet& t, VertexId s,
             const Wave& w) {
  if (!t.contains(s) || !g.has_vertex(s) || w.root != s) return false;
  EdgeSet last;
  for (const Path& p : w.paths) {
    if (!check_simple_path(g, p).empty()) return false;
    if (p.edges.empty() || p.first() != s) return false;
    if (!last.insert(p.edges.back()).second) return false;
  }
  if (!edge_disjoint(w.paths)) return false;
  if (last != w.cut.edges) return false;
  for (EdgeId e : w.cut.edges) {
    if (!g.has_edge(e)) return false;
  }
  const VertexSet side = side_from_edges(g, s, w.cut.edges);
  if (side != w.cut.side) return false;
  if (boundary(g, side) != w.cut.edges) return false;
  return is_minimal_cut(g, VertexSet{s}, t.others(s), side);
}

Wave large_wave(const Multigraph& g, const TerminalSet& t, VertexId s,
                const std::optional<PathSystem>& seed) {
  require_terminal(g, t, s);
  const VertexSet root{s};
  const VertexSet others = t.others(s);

  // Grow the root side by repeatedly contracting the largest minimum cut
  // until only the trivial wave is left.
  Multigraph h = g;
  VertexSet side{s};
  for (;;) {
    Cut largest = min_cut_largest(h, root, others);
    if (largest.side == root) break;
    side.insert(largest.side.begin(), largest.side.end());
    ContractionFamily family;
    family.parts[s] = largest.side;
    h = contract(h, family);
  }

  Wave wave;
  wave.root = s;
  wave.cut = make_cut(g, root, others, side);
  VertexSet beyond;
  for (VertexId v : g.component_of(s)) {
    if (!side.count(v)) beyond.insert(v);
  }
  if (!beyond.empty()) {
    internal::UnitFlow flow(g, root, beyond);
    if (flow.saturate() != static_cast<int>(wave.cut.edges.size())) {
      throw Error(Errc::kPrecondition,
                  "contracted side does not carry a wave at " + g.name(s));
    }
    wave.paths = flow.decompose();
  }

  if (seed && !seed->empty()) {
    std::string err = check_ab_paths(g, root, others, *seed);
    if (!err.empty()) throw Error(Errc::kPrecondition, "seed: " + err);
    // Contract everything beyond the cut to one sink and merge the seed's
    // initial segments (at the source) with the wave (at the sink).
    const VertexId sink = *beyond.begin();
    ContractionFamily family;
    family.parts[sink] = beyond;
    Multigraph shrunk = contract(g, family);
    PathSystem heads;
    for (const Path& p : *seed) {
      Path head{{s}, {}};
      for (std::size_t i = 0; i < p.edges.size(); ++i) {
        head.edges.push_back(p.edges[i]);
        head.vertices.push_back(p.vertices[i + 1]);
        if (wave.cut.edges.count(p.edges[i])) break;
      }
      heads.push_back(std::move(head));
    }
    PathSystem merged =
        pym_merge(shrunk, s, sink, redirect_ends(heads, sink),
                  redirect_ends(wave.paths, sink));
    for (Path& p : merged) {
      VertexId before = p.vertices[p.vertices.size() - 2];
      p.vertices.back() = g.opposite(p.edges.back(), before);
    }
    wave.paths = std::move(merged);
  }
  return wave;
}

EliminationRecord wave_elimination(const Multigraph& g, const TerminalSet& t,
                                   const std::vector<VertexId>& order) {
  VertexSet seen;
  for (VertexId v : order) {
    require_terminal(g, t, v);
    if (!seen.insert(v).second) {
      throw Error(Errc::kInvalidArgument,
                  "terminal " + g.name(v) + " listed twice in the order");
    }
  }
  EliminationRecord record{g, t, {}};
  for (VertexId terminal : order) {
    const Multigraph& current = record.final_graph();
    Wave wave = large_wave(current, t, terminal);
    ContractionFamily family;
    family.parts[terminal] = wave.cut.side;
    Multigraph next = contract(current, family);
    record.steps.push_back({terminal, std::move(wave), std::move(next)});
  }
  return record;
}

PathSystem extend_through_waves(const EliminationRecord& record,
                                const PathSystem& paths) {
  const Multigraph& last = record.final_graph();
  for (const Path& p : paths) {
    for (EdgeId e : p.edges) {
      if (!last.has_edge(e)) {
        throw Error(Errc::kUnknownEdge,
                    "edge " + std::to_string(e) + " is not in the final graph");
      }
    }
  }
  PathSystem current = paths;
  for (auto step = record.steps.rbegin(); step != record.steps.rend();
       ++step) {
    std::map<EdgeId, const Path*> by_last_edge;
    for (const Path& w : step->wave.paths) by_last_edge[w.edges.back()] = &w;
    for (Path& p : current) {
      bool flip = p.last() == step->terminal;
      if (!flip && p.first() != step->terminal) continue;
      if (flip) p = p.reversed();
      auto it = by_last_edge.find(p.edges.front());
      if (it == by_last_edge.end()) {
        throw Error(Errc::kPrecondition,
                    "edge " + std::to_string(p.edges.front()) +
                        " at a processed terminal is not a wave edge");
      }
      Path lifted = *it->second;
      lifted.vertices.insert(lifted.vertices.end(), p.vertices.begin() + 2,
                             p.vertices.end());
      lifted.edges.insert(lifted.edges.end(), p.edges.begin() + 1,
                          p.edges.end());
      p = flip ? lifted.reversed() : std::move(lifted);
    }
  }
  return current;
}

}  // namespace tpaths
