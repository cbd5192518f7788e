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

#include "tpaths/multigraph.h"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

#include "tpaths/error.h"

namespace tpaths {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::kUnknownVertex:
      return "unknown-vertex";
    case Errc::kUnknownEdge:
      return "unknown-edge";
    case Errc::kInvalidArgument:
      return "invalid-argument";
    case Errc::kPrecondition:
      return "precondition";
    case Errc::kSizeLimit:
      return "size-limit";
    case Errc::kParse:
      return "parse";
  }
  return "unknown";
}

Multigraph::Multigraph(std::vector<std::string> vertex_names,
                       std::vector<Edge> edges)
    : names_(std::move(vertex_names)),
      present_(names_.size(), true),
      edges_(std::move(edges)) {
  index();
}

Multigraph Multigraph::from_parts(const Multigraph& universe,
                                  const VertexSet& present,
                                  std::vector<Edge> edges) {
  Multigraph g;
  g.names_ = universe.names_;
  g.present_.assign(g.names_.size(), false);
  for (VertexId v : present) {
    if (v < 0 || v >= universe.universe_size()) {
      throw Error(Errc::kUnknownVertex,
                  "vertex id " + std::to_string(v) + " outside universe");
    }
    g.present_[v] = true;
  }
  g.edges_ = std::move(edges);
  g.index();
  return g;
}

void Multigraph::index() {
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  vertices_.clear();
  for (VertexId v = 0; v < universe_size(); ++v) {
    if (present_[v]) vertices_.push_back(v);
  }
  incident_.assign(names_.size(), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (i > 0 && edges_[i - 1].id == e.id) {
      throw Error(Errc::kInvalidArgument,
                  "duplicate edge id " + std::to_string(e.id));
    }
    if (!has_vertex(e.u) || !has_vertex(e.v)) {
      throw Error(Errc::kUnknownVertex, "edge " + std::to_string(e.id) +
                                            " has an endpoint outside the graph");
    }
    if (e.u == e.v) {
      throw Error(Errc::kInvalidArgument,
                  "edge " + std::to_string(e.id) + " is a loop");
    }
    incident_[e.u].push_back(e.id);
    incident_[e.v].push_back(e.id);
  }
}

const std::string& Multigraph::name(VertexId v) const {
  if (v < 0 || v >= universe_size()) {
    throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(v));
  }
  return names_[v];
}

std::optional<VertexId> Multigraph::find_vertex(std::string_view name) const {
  for (VertexId v = 0; v < universe_size(); ++v) {
    if (present_[v] && names_[v] == name) return v;
  }
  return std::nullopt;
}

bool Multigraph::has_vertex(VertexId v) const {
  return v >= 0 && v < universe_size() && present_[v];
}

bool Multigraph::has_edge(EdgeId e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const Edge& edge, EdgeId id) { return edge.id < id; });
  return it != edges_.end() && it->id == e;
}

std::vector<EdgeId> Multigraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges_.size());
  for (const Edge& e : edges_) ids.push_back(e.id);
  return ids;
}

const Edge& Multigraph::edge(EdgeId e) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), e,
      [](const Edge& edge, EdgeId id) { return edge.id < id; });
  if (it == edges_.end() || it->id != e) {
    throw Error(Errc::kUnknownEdge, "edge id " + std::to_string(e));
  }
  return *it;
}

VertexId Multigraph::opposite(EdgeId e, VertexId v) const {
  const Edge& edge = this->edge(e);
  if (edge.u == v) return edge.v;
  if (edge.v == v) return edge.u;
  throw Error(Errc::kInvalidArgument, "edge " + std::to_string(e) +
                                          " is not incident with vertex " +
                                          std::to_string(v));
}

std::span<const EdgeId> Multigraph::incident(VertexId v) const {
  if (!has_vertex(v)) {
    throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(v));
  }
  return incident_[v];
}

EdgeId Multigraph::max_edge_id() const {
  return edges_.empty() ? 0 : edges_.back().id;
}

Multigraph Multigraph::without_edges(const EdgeSet& removed) const {
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (!removed.count(e.id)) kept.push_back(e);
  }
  VertexSet present(vertices_.begin(), vertices_.end());
  return from_parts(*this, present, std::move(kept));
}

Multigraph Multigraph::with_edge(Edge added) const {
  std::vector<Edge> all = edges_;
  all.push_back(added);
  VertexSet present(vertices_.begin(), vertices_.end());
  return from_parts(*this, present, std::move(all));
}

std::vector<VertexSet> Multigraph::components() const {
  std::vector<VertexSet> out;
  std::vector<bool> seen(names_.size(), false);
  for (VertexId root : vertices_) {
    if (seen[root]) continue;
    VertexSet comp;
    std::vector<VertexId> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (EdgeId e : incident_[v]) {
        VertexId w = opposite(e, v);
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet Multigraph::component_of(VertexId v) const {
  return components_meeting(VertexSet{v});
}

VertexSet Multigraph::components_meeting(const VertexSet& seeds) const {
  VertexSet out;
  std::vector<VertexId> stack;
  for (VertexId s : seeds) {
    if (!has_vertex(s)) {
      throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(s));
    }
    if (out.insert(s).second) stack.push_back(s);
  }
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident_[v]) {
      VertexId w = opposite(e, v);
      if (out.insert(w).second) stack.push_back(w);
    }
  }
  return out;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
  return a.names_ == b.names_ && a.vertices_ == b.vertices_ &&
         a.edges_ == b.edges_;
}

TerminalSet::TerminalSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  for (VertexId v : ids_) {
    if (!members_.insert(v).second) {
      throw Error(Errc::kInvalidArgument,
                  "terminal " + std::to_string(v) + " listed twice");
    }
  }
}

VertexSet TerminalSet::others(VertexId t) const {
  VertexSet out = members_;
  out.erase(t);
  return out;
}

Path Path::reversed() const {
  Path p{{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
  return p;
}

EdgeSet boundary(const Multigraph& g, const VertexSet& x) {
  EdgeSet out;
  for (VertexId v : x) {
    for (EdgeId e : g.incident(v)) {
      if (!x.count(g.opposite(e, v))) out.insert(e);
    }
  }
  return out;
}

int boundary_degree(const Multigraph& g, const VertexSet& x) {
  return static_cast<int>(boundary(g, x).size());
}

int inner_edge_count(const Multigraph& g, const VertexSet& x) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (x.count(e.u) && x.count(e.v)) ++count;
  }
  return count;
}

Multigraph contract(const Multigraph& g, const ContractionFamily& family) {
  std::unordered_map<VertexId, VertexId> image;
  for (const auto& [root, part] : family.parts) {
    if (!g.has_vertex(root)) {
      throw Error(Errc::kUnknownVertex, "root " + std::to_string(root));
    }
    if (!part.count(root)) {
      throw Error(Errc::kInvalidArgument,
                  "root " + std::to_string(root) + " missing from its part");
    }
    for (VertexId v : part) {
      if (!g.has_vertex(v)) {
        throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(v));
      }
      if (v != root && family.parts.count(v)) {
        throw Error(Errc::kInvalidArgument,
                    "part of " + std::to_string(root) + " contains root " +
                        std::to_string(v));
      }
      if (!image.emplace(v, root).second) {
        throw Error(Errc::kInvalidArgument,
                    "contraction parts overlap at vertex " + std::to_string(v));
      }
    }
  }
  auto map_vertex = [&](VertexId v) {
    auto it = image.find(v);
    return it == image.end() ? v : it->second;
  };
  VertexSet present;
  for (VertexId v : g.vertices()) {
    if (!image.count(v) || family.parts.count(v)) present.insert(v);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    VertexId u = map_vertex(e.u);
    VertexId v = map_vertex(e.v);
    if (u != v) edges.push_back({e.id, u, v});
  }
  return Multigraph::from_parts(g, present, std::move(edges));
}

namespace {

// Components of G[s].
std::vector<VertexSet> induced_components(const Multigraph& g,
                                          const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (VertexId root : s) {
    if (seen.count(root)) continue;
    VertexSet comp{root};
    seen.insert(root);
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.opposite(e, v);
        if (s.count(w) && seen.insert(w).second) {
          comp.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool meets(const VertexSet& x, const VertexSet& y) {
  for (VertexId v : x) {
    if (y.count(v)) return true;
  }
  return false;
}

}  // namespace

bool is_minimal_cut(const Multigraph& g, const VertexSet& a,
                    const VertexSet& b, const VertexSet& side) {
  VertexSet seeds = a;
  seeds.insert(b.begin(), b.end());
  const VertexSet relevant = g.components_meeting(seeds);
  for (VertexId v : a) {
    if (!side.count(v)) return false;
  }
  if (meets(side, b)) return false;
  VertexSet rest;
  for (VertexId v : relevant) {
    if (!side.count(v)) rest.insert(v);
  }
  for (VertexId v : side) {
    if (!relevant.count(v)) return false;
  }
  for (const VertexSet& comp : induced_components(g, side)) {
    if (!meets(comp, a)) return false;
  }
  for (const VertexSet& comp : induced_components(g, rest)) {
    if (!meets(comp, b)) return false;
  }
  return true;
}

Cut make_cut(const Multigraph& g, const VertexSet& a, const VertexSet& b,
             const VertexSet& side) {
  return Cut{boundary(g, side), side, is_minimal_cut(g, a, b, side)};
}

InnerEulerianReport is_inner_eulerian(const Multigraph& g,
                                      const TerminalSet& t) {
  for (VertexId v : g.vertices()) {
    if (!t.contains(v) && g.degree(v) % 2 != 0) return {false, v};
  }
  return {true, std::nullopt};
}

namespace {

class TrailWalker {
 public:
  explicit TrailWalker(const Multigraph& g)
      : g_(g), next_(g.universe_size(), 0), remaining_(g.universe_size(), 0) {
    for (VertexId v : g.vertices()) remaining_[v] = g.degree(v);
  }

  int remaining(VertexId v) const { return remaining_[v]; }

  // Greedy maximal trail from `start`, always leaving by the lowest unused
  // edge id.
  Path walk(VertexId start) {
    Path trail{{start}, {}};
    VertexId cur = start;
    for (;;) {
      auto inc = g_.incident(cur);
      std::size_t& pos = next_[cur];
      while (pos < inc.size() && used_.count(inc[pos])) ++pos;
      if (pos == inc.size()) break;
      EdgeId e = inc[pos];
      used_.insert(e);
      VertexId w = g_.opposite(e, cur);
      --remaining_[cur];
      --remaining_[w];
      trail.edges.push_back(e);
      trail.vertices.push_back(w);
      cur = w;
    }
    return trail;
  }

 private:
  const Multigraph& g_;
  std::vector<std::size_t> next_;
  std::vector<int> remaining_;
  EdgeSet used_;
};

// Peels cycles off a trail whenever a vertex repeats, then cuts the simple
// remainder at inner terminal occurrences.
void split_trail(const Path& trail, const TerminalSet& t,
                 std::vector<DecompositionPart>& out) {
  std::vector<VertexId> sv{trail.vertices.front()};
  std::vector<EdgeId> se;
  for (std::size_t i = 0; i < trail.edges.size(); ++i) {
    VertexId w = trail.vertices[i + 1];
    auto it = std::find(sv.begin(), sv.end(), w);
    if (it != sv.end()) {
      std::size_t pos = static_cast<std::size_t>(it - sv.begin());
      Path cycle{{sv.begin() + pos, sv.end()}, {se.begin() + pos, se.end()}};
      cycle.vertices.push_back(w);
      cycle.edges.push_back(trail.edges[i]);
      out.push_back({PartKind::kCycle, std::move(cycle)});
      sv.resize(pos + 1);
      se.resize(pos);
    } else {
      sv.push_back(w);
      se.push_back(trail.edges[i]);
    }
  }
  Path piece{{sv.front()}, {}};
  for (std::size_t i = 0; i < se.size(); ++i) {
    piece.edges.push_back(se[i]);
    piece.vertices.push_back(sv[i + 1]);
    if (t.contains(sv[i + 1])) {
      out.push_back({PartKind::kTPath, std::move(piece)});
      piece = Path{{sv[i + 1]}, {}};
    }
  }
  if (!piece.edges.empty()) {
    throw Error(Errc::kPrecondition, "trail ended at a non-terminal vertex");
  }
}

}  // namespace

std::vector<DecompositionPart> eulerian_decomposition(const Multigraph& g,
                                                      const TerminalSet& t) {
  InnerEulerianReport report = is_inner_eulerian(g, t);
  if (!report.inner_eulerian) {
    throw Error(Errc::kPrecondition,
                "graph is not inner Eulerian: vertex " +
                    g.name(*report.odd_vertex) + " has odd degree");
  }
  std::vector<DecompositionPart> out;
  TrailWalker walker(g);
  VertexSet ordered_terminals = t.as_set();
  for (VertexId s : ordered_terminals) {
    if (!g.has_vertex(s)) {
      throw Error(Errc::kUnknownVertex, "terminal id " + std::to_string(s));
    }
    while (walker.remaining(s) % 2 != 0) split_trail(walker.walk(s), t, out);
  }
  for (VertexId v : g.vertices()) {
    while (walker.remaining(v) > 0) split_trail(walker.walk(v), t, out);
  }
  return out;
}

std::string check_walk(const Multigraph& g, const Path& p) {
  if (p.vertices.empty()) return "empty vertex list";
  if (p.vertices.size() != p.edges.size() + 1) {
    return "vertex and edge counts do not match";
  }
  for (VertexId v : p.vertices) {
    if (!g.has_vertex(v)) return "unknown vertex " + std::to_string(v);
  }
  EdgeSet seen;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    EdgeId e = p.edges[i];
    if (!g.has_edge(e)) return "unknown edge " + std::to_string(e);
    if (!seen.insert(e).second) return "edge " + std::to_string(e) + " repeats";
    const Edge& edge = g.edge(e);
    VertexId a = p.vertices[i];
    VertexId b = p.vertices[i + 1];
    if (!((edge.u == a && edge.v == b) || (edge.u == b && edge.v == a))) {
      return "edge " + std::to_string(e) + " does not join consecutive vertices";
    }
  }
  return {};
}

std::string check_simple_path(const Multigraph& g, const Path& p) {
  std::string err = check_walk(g, p);
  if (!err.empty()) return err;
  VertexSet seen;
  for (VertexId v : p.vertices) {
    if (!seen.insert(v).second) return "vertex " + g.name(v) + " repeats";
  }
  return {};
}

std::string check_tpath(const Multigraph& g, const TerminalSet& t,
                        const Path& p) {
  std::string err = check_simple_path(g, p);
  if (!err.empty()) return err;
  if (p.edges.empty()) return "path has no edges";
  if (!t.contains(p.first()) || !t.contains(p.last())) {
    return "path does not join two terminals";
  }
  for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
    if (t.contains(p.vertices[i])) {
      return "terminal " + g.name(p.vertices[i]) + " is an inner vertex";
    }
  }
  return {};
}

bool edge_disjoint(const PathSystem& paths) {
  EdgeSet seen;
  for (const Path& p : paths) {
    for (EdgeId e : p.edges) {
      if (!seen.insert(e).second) return false;
    }
  }
  return true;
}

EdgeSet path_edges(const PathSystem& paths) {
  EdgeSet out;
  for (const Path& p : paths) out.insert(p.edges.begin(), p.edges.end());
  return out;
}

namespace {

// Portable bounded draws; std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  int below(int n) {
    return n <= 1 ? 0 : static_cast<int>(rng_() % static_cast<std::uint64_t>(n));
  }

  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  std::vector<int> sample(std::vector<int> pool, int k) {
    for (int i = 0; i < k && i < static_cast<int>(pool.size()); ++i) {
      int j = i + below(static_cast<int>(pool.size()) - i);
      std::swap(pool[i], pool[j]);
    }
    pool.resize(std::min<std::size_t>(pool.size(), k));
    return pool;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace

Instance random_inner_eulerian(std::uint64_t seed,
                               const GeneratorBounds& bounds) {
  if (bounds.max_vertices < 2 || bounds.max_terminals < 2 ||
      bounds.max_edges < 0) {
    throw Error(Errc::kInvalidArgument,
                "generator needs at least 2 vertices and 2 terminals");
  }
  Draw draw(seed);
  const int n = draw.between(2, bounds.max_vertices);
  const int k = draw.between(2, std::min(n, bounds.max_terminals));
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<int> terms = draw.sample(all, k);
  std::sort(terms.begin(), terms.end());
  std::vector<int> inner;
  for (int v : all) {
    if (!std::binary_search(terms.begin(), terms.end(), v)) inner.push_back(v);
  }

  std::vector<std::string> names(n);
  for (int v = 0; v < n; ++v) {
    bool is_terminal = std::binary_search(terms.begin(), terms.end(), v);
    names[v] = (is_terminal ? "t" : "v") + std::to_string(v);
  }

  const int budget = draw.between(1, std::max(1, bounds.max_edges));
  std::vector<Edge> edges;
  auto add_walk = [&](const std::vector<int>& walk) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      edges.push_back({static_cast<EdgeId>(edges.size() + 1), walk[i],
                       walk[i + 1]});
    }
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    const int room = budget - static_cast<int>(edges.size());
    if (room <= 0) break;
    if (draw.below(2) == 0) {
      std::vector<int> ends = draw.sample(terms, 2);
      int max_inner = std::min<int>(3, static_cast<int>(inner.size()));
      int len = draw.between(0, max_inner);
      if (len + 1 > room) continue;
      std::vector<int> walk{ends[0]};
      for (int v : draw.sample(inner, len)) walk.push_back(v);
      walk.push_back(ends[1]);
      add_walk(walk);
    } else {
      int len = draw.between(2, std::min(n, 4));
      if (len > room) continue;
      std::vector<int> walk = draw.sample(all, len);
      walk.push_back(walk.front());
      add_walk(walk);
    }
  }
  std::vector<VertexId> term_ids(terms.begin(), terms.end());
  return Instance{Multigraph(std::move(names), std::move(edges)),
                  TerminalSet(std::move(term_ids))};
}

}  // namespace tpaths
