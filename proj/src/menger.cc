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

#include "tpaths/menger.h"

#include <algorithm>
#include <map>

#include "directed_flow.h"
#include "tpaths/error.h"
#include "unit_flow.h"

namespace tpaths {
namespace {

void require_endpoints(const Multigraph& g, const VertexSet& a,
                       const VertexSet& b) {
  if (a.empty()) throw Error(Errc::kInvalidArgument, "source set is empty");
  for (VertexId v : a) {
    if (!g.has_vertex(v)) {
      throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(v));
    }
    if (b.count(v)) {
      throw Error(Errc::kInvalidArgument,
                  "source and sink sets share vertex " + g.name(v));
    }
  }
  for (VertexId v : b) {
    if (!g.has_vertex(v)) {
      throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(v));
    }
  }
}

VertexSet set_union(const VertexSet& x, const VertexSet& y) {
  VertexSet out = x;
  out.insert(y.begin(), y.end());
  return out;
}

}  // namespace

std::string check_ab_paths(const Multigraph& g, const VertexSet& a,
                           const VertexSet& b, const PathSystem& paths) {
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const Path& p = paths[k];
    std::string err = check_simple_path(g, p);
    if (!err.empty()) return "path " + std::to_string(k) + ": " + err;
    if (p.edges.empty()) return "path " + std::to_string(k) + " has no edges";
    if (!a.count(p.first()) || !b.count(p.last())) {
      return "path " + std::to_string(k) + " does not run from A to B";
    }
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
      if (a.count(p.vertices[i]) || b.count(p.vertices[i])) {
        return "path " + std::to_string(k) + " has an inner vertex in A or B";
      }
    }
  }
  if (!edge_disjoint(paths)) return "paths are not edge-disjoint";
  return {};
}

bool is_orthogonal(const Cut& cut, const PathSystem& paths) {
  EdgeSet covered;
  for (const Path& p : paths) {
    int hits = 0;
    for (EdgeId e : p.edges) {
      if (cut.edges.count(e)) {
        ++hits;
        covered.insert(e);
      }
    }
    if (hits != 1) return false;
  }
  return covered == cut.edges;
}

FlowResult max_disjoint_paths(const Multigraph& g, const VertexSet& a,
                              const VertexSet& b) {
  require_endpoints(g, a, b);
  internal::UnitFlow flow(g, a, b);
  flow.saturate();
  FlowResult result;
  result.paths = flow.decompose();
  result.cut = make_cut(g, a, b, flow.source_reachable());
  result.orthogonal = is_orthogonal(result.cut, result.paths);
  return result;
}

int lambda(const Multigraph& g, const VertexSet& a, const VertexSet& b) {
  require_endpoints(g, a, b);
  internal::UnitFlow flow(g, a, b);
  return flow.saturate();
}

int lambda(const Multigraph& g, VertexId s, VertexId t) {
  return lambda(g, VertexSet{s}, VertexSet{t});
}

Cut min_cut_smallest(const Multigraph& g, const VertexSet& a,
                     const VertexSet& b) {
  require_endpoints(g, a, b);
  internal::UnitFlow flow(g, a, b);
  flow.saturate();
  return make_cut(g, a, b, flow.source_reachable());
}

Cut min_cut_largest(const Multigraph& g, const VertexSet& a,
                    const VertexSet& b) {
  require_endpoints(g, a, b);
  internal::UnitFlow flow(g, a, b);
  flow.saturate();
  const VertexSet reaching = flow.sink_coreachable();
  VertexSet side;
  for (VertexId v : g.components_meeting(set_union(a, b))) {
    if (!reaching.count(v)) side.insert(v);
  }
  return make_cut(g, a, b, side);
}

bool is_minimum_cut(const Multigraph& g, const VertexSet& a,
                    const VertexSet& b, const Cut& cut) {
  for (VertexId v : a) {
    if (!cut.side.count(v)) return false;
  }
  for (VertexId v : b) {
    if (cut.side.count(v)) return false;
  }
  for (VertexId v : cut.side) {
    if (!g.has_vertex(v)) return false;
  }
  if (boundary(g, cut.side) != cut.edges) return false;
  return static_cast<int>(cut.edges.size()) == lambda(g, a, b);
}

namespace {

Cut combine(const Multigraph& g, const VertexSet& a, const VertexSet& b,
            const Cut& c1, const Cut& c2, bool meet) {
  if (!is_minimum_cut(g, a, b, c1) || !is_minimum_cut(g, a, b, c2)) {
    throw Error(Errc::kPrecondition, "lattice operands must be minimum cuts");
  }
  VertexSet side;
  if (meet) {
    std::set_intersection(c1.side.begin(), c1.side.end(), c2.side.begin(),
                          c2.side.end(), std::inserter(side, side.end()));
  } else {
    side = set_union(c1.side, c2.side);
  }
  return make_cut(g, a, b, side);
}

}  // namespace

Cut cut_meet(const Multigraph& g, const VertexSet& a, const VertexSet& b,
             const Cut& c1, const Cut& c2) {
  return combine(g, a, b, c1, c2, true);
}

Cut cut_join(const Multigraph& g, const VertexSet& a, const VertexSet& b,
             const Cut& c1, const Cut& c2) {
  return combine(g, a, b, c1, c2, false);
}

std::variant<PathSystem, Cut> augment_once(const Multigraph& g,
                                           const VertexSet& a,
                                           const VertexSet& b,
                                           const PathSystem& p) {
  require_endpoints(g, a, b);
  std::string err = check_ab_paths(g, a, b, p);
  if (!err.empty()) throw Error(Errc::kPrecondition, err);
  internal::UnitFlow flow(g, a, b);
  flow.load(p);
  if (flow.augment()) return flow.decompose();
  return make_cut(g, a, b, flow.source_reachable());
}

EdgeSet start_edges(const PathSystem& paths) {
  EdgeSet out;
  for (const Path& p : paths) {
    if (!p.edges.empty()) out.insert(p.edges.front());
  }
  return out;
}

EdgeSet end_edges(const PathSystem& paths) {
  EdgeSet out;
  for (const Path& p : paths) {
    if (!p.edges.empty()) out.insert(p.edges.back());
  }
  return out;
}

// Lower-bound reduction: the first edges of P and the last edges of Q are
// forced to carry one unit, the rest is a unit-capacity network without arcs
// into s or out of t, closed by an uncapacitated return arc t->s. Any
// feasible circulation restricted to the original edges is an st-flow whose
// decomposition has the required end edges.
PathSystem pym_merge(const Multigraph& g, VertexId s, VertexId t,
                     const PathSystem& p, const PathSystem& q) {
  if (s == t) throw Error(Errc::kInvalidArgument, "s and t coincide");
  const VertexSet a{s};
  const VertexSet b{t};
  require_endpoints(g, a, b);
  for (const PathSystem* sys : {&p, &q}) {
    std::string err = check_ab_paths(g, a, b, *sys);
    if (!err.empty()) throw Error(Errc::kPrecondition, err);
  }

  std::map<EdgeId, VertexId> forced_tail;
  for (const Path& path : p) forced_tail[path.edges.front()] = s;
  for (const Path& path : q) {
    EdgeId e = path.edges.back();
    VertexId tail = path.vertices[path.vertices.size() - 2];
    auto [it, inserted] = forced_tail.emplace(e, tail);
    if (!inserted && it->second != tail) {
      throw Error(Errc::kPrecondition,
                  "edge " + std::to_string(e) + " forced in both directions");
    }
  }

  const int n = g.universe_size();
  const int super_source = n;
  const int super_sink = n + 1;
  internal::DirectedFlow net(n + 2);
  std::vector<int> supply(n, 0);
  std::vector<int> demand(n, 0);
  struct Arcs {
    EdgeId id;
    int forward = -1;   // u -> v
    int backward = -1;  // v -> u
  };
  std::vector<Arcs> free_arcs;
  for (const Edge& e : g.edges()) {
    auto forced = forced_tail.find(e.id);
    if (forced != forced_tail.end()) {
      VertexId tail = forced->second;
      VertexId head = tail == e.u ? e.v : e.u;
      ++supply[head];
      ++demand[tail];
      continue;
    }
    Arcs arcs{e.id};
    if (e.v != s && e.u != t) arcs.forward = net.add_arc(e.u, e.v, 1);
    if (e.u != s && e.v != t) arcs.backward = net.add_arc(e.v, e.u, 1);
    free_arcs.push_back(arcs);
  }
  int required = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (supply[v] > 0) net.add_arc(super_source, v, supply[v]);
    if (demand[v] > 0) net.add_arc(v, super_sink, demand[v]);
    required += supply[v];
  }
  net.add_arc(t, s, g.num_edges() + 1);
  if (net.max_flow(super_source, super_sink) != required) {
    throw Error(Errc::kPrecondition, "no merged path system exists");
  }

  internal::UnitFlow flow(g, a, b);
  for (const auto& [e, tail] : forced_tail) flow.set_flow(e, tail);
  for (const Arcs& arcs : free_arcs) {
    int fwd = arcs.forward < 0 ? 0 : net.flow(arcs.forward);
    int bwd = arcs.backward < 0 ? 0 : net.flow(arcs.backward);
    const Edge& e = g.edge(arcs.id);
    if (fwd - bwd == 1) flow.set_flow(arcs.id, e.u);
    if (bwd - fwd == 1) flow.set_flow(arcs.id, e.v);
  }
  return flow.decompose();
}

}  // namespace tpaths
