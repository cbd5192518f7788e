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

#include "tpaths/duality.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "tpaths/error.h"

namespace tpaths {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

VertexSet TPartition::covered() const {
  VertexSet out;
  for (const auto& [t, part] : parts) out.insert(part.begin(), part.end());
  return out;
}

void validate_partition(const Multigraph& g, const TerminalSet& t,
                        const TPartition& a) {
  VertexSet seen;
  for (VertexId s : t.ids()) {
    auto it = a.parts.find(s);
    if (it == a.parts.end()) {
      throw Error(Errc::kInvalidArgument, "no part for terminal " + g.name(s));
    }
  }
  for (const auto& [s, part] : a.parts) {
    if (!t.contains(s)) {
      throw Error(Errc::kInvalidArgument,
                  "part keyed by non-terminal " + std::to_string(s));
    }
    if (!part.count(s)) {
      throw Error(Errc::kInvalidArgument,
                  "part of " + g.name(s) + " does not contain it");
    }
    for (VertexId v : part) {
      if (!g.has_vertex(v)) {
        throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(v));
      }
      if (v != s && t.contains(v)) {
        throw Error(Errc::kInvalidArgument,
                    "part of " + g.name(s) + " contains terminal " + g.name(v));
      }
      if (!seen.insert(v).second) {
        throw Error(Errc::kInvalidArgument,
                    "parts overlap at vertex " + g.name(v));
      }
    }
  }
}

std::vector<VertexSet> free_components(const Multigraph& g,
                                       const TPartition& a) {
  const VertexSet covered = a.covered();
  std::vector<VertexSet> out;
  VertexSet seen;
  for (VertexId root : g.vertices()) {
    if (covered.count(root) || seen.count(root)) continue;
    VertexSet comp{root};
    seen.insert(root);
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.opposite(e, v);
        if (covered.count(w) || !seen.insert(w).second) continue;
        comp.insert(w);
        stack.push_back(w);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

namespace {

// Decides whether the boundary of a free component, viewed at the
// contracted complement vertex, is covered by edge-disjoint cycles, by
// constructing those cycles: a J-join inside G[Y] (J = odd attachments)
// plus the boundary edges is an even subgraph, which decomposes into cycles.
bool boundary_coverable(const Multigraph& g, const VertexSet& y,
                        const VertexSet& odd) {
  const EdgeSet cut = boundary(g, y);
  if (cut.size() % 2 != 0 || odd.size() % 2 != 0) return false;

  // J-join from a BFS spanning tree of G[Y]: keep a tree edge iff the
  // subtree below it holds an odd number of J vertices.
  const VertexId root = *y.begin();
  std::map<VertexId, EdgeId> parent_edge;
  std::vector<VertexId> order{root};
  VertexSet reached{root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.opposite(e, v);
      if (!y.count(w) || !reached.insert(w).second) continue;
      parent_edge[w] = e;
      order.push_back(w);
    }
  }
  if (reached.size() != y.size()) return false;
  std::map<VertexId, int> below;
  for (VertexId v : y) below[v] = odd.count(v) ? 1 : 0;
  EdgeSet join;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (*it == root) continue;
    EdgeId e = parent_edge[*it];
    if (below[*it] % 2 != 0) join.insert(e);
    below[g.opposite(e, *it)] += below[*it];
  }

  std::vector<std::string> names;
  for (VertexId v = 0; v < g.universe_size(); ++v) names.push_back(g.name(v));
  const VertexId hub = static_cast<VertexId>(names.size());
  names.push_back("*");
  std::vector<Edge> edges;
  for (EdgeId e : cut) {
    const Edge& edge = g.edge(e);
    VertexId inside = y.count(edge.u) ? edge.u : edge.v;
    edges.push_back({e, inside, hub});
  }
  for (EdgeId e : join) edges.push_back(g.edge(e));
  Multigraph h(std::move(names), std::move(edges));
  for (VertexId v : h.vertices()) {
    if (h.degree(v) % 2 != 0) return false;
  }
  EdgeSet in_cycles;
  for (const DecompositionPart& part : eulerian_decomposition(h, TerminalSet{})) {
    if (part.kind != PartKind::kCycle) return false;
    in_cycles.insert(part.path.edges.begin(), part.path.edges.end());
  }
  return std::includes(in_cycles.begin(), in_cycles.end(), cut.begin(),
                       cut.end());
}

}  // namespace

ObstructionReport obstructive_components(const Multigraph& g,
                                         const TerminalSet& t,
                                         const TPartition& a) {
  validate_partition(g, t, a);
  ObstructionReport report;
  for (VertexSet& y : free_components(g, a)) {
    ObstructionReport::Component c;
    c.degree = boundary_degree(g, y);
    c.obstructive = c.degree % 2 != 0;
    for (VertexId u : y) {
      int outside = 0;
      for (EdgeId e : g.incident(u)) outside += y.count(g.opposite(e, u)) ? 0 : 1;
      if (outside % 2 != 0) c.odd_attachments.insert(u);
    }
    c.obstructive_extended = !boundary_coverable(g, y, c.odd_attachments);
    c.vertices = std::move(y);
    report.obstructive_count += c.obstructive ? 1 : 0;
    report.components.push_back(std::move(c));
  }
  return report;
}

namespace {

Rational bound_unchecked(const Multigraph& g, const TPartition& a) {
  std::int64_t total = 0;
  for (const auto& [s, part] : a.parts) total += boundary_degree(g, part);
  for (const VertexSet& y : free_components(g, a)) {
    total -= boundary_degree(g, y) % 2;
  }
  return Rational(total, 2);
}

}  // namespace

Rational mader_bound(const Multigraph& g, const TerminalSet& t,
                     const TPartition& a) {
  validate_partition(g, t, a);
  return bound_unchecked(g, a);
}

MaderResult mader_min(const Multigraph& g, const TerminalSet& t,
                      int max_free_vertices) {
  if (t.empty()) throw Error(Errc::kInvalidArgument, "terminal set is empty");
  for (VertexId s : t.ids()) {
    if (!g.has_vertex(s)) {
      throw Error(Errc::kUnknownVertex, "terminal id " + std::to_string(s));
    }
  }
  std::vector<VertexId> inner;
  for (VertexId v : g.vertices()) {
    if (!t.contains(v)) inner.push_back(v);
  }
  if (static_cast<int>(inner.size()) > max_free_vertices) {
    throw Error(Errc::kSizeLimit,
                std::to_string(inner.size()) + " non-terminals exceed the bound " +
                    std::to_string(max_free_vertices));
  }
  const int base = t.size() + 1;
  std::vector<int> digit(inner.size(), 0);  // 0 = free, k = terminal k-1
  std::optional<MaderResult> best;
  for (;;) {
    TPartition a;
    for (VertexId s : t.ids()) a.parts[s] = {s};
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (digit[i] > 0) a.parts[t.ids()[digit[i] - 1]].insert(inner[i]);
    }
    Rational value = bound_unchecked(g, a);
    if (!best || value < best->value) best = MaderResult{value, std::move(a)};
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == base) digit[i++] = 0;
    if (i == digit.size()) break;
  }
  return *best;
}

std::vector<Path> enumerate_tpaths(const Multigraph& g, const TerminalSet& t) {
  std::vector<Path> out;
  Path current;
  VertexSet on_path;
  std::function<void(VertexId)> extend = [&](VertexId start) {
    const VertexId tip = current.last();
    for (EdgeId e : g.incident(tip)) {
      VertexId w = g.opposite(e, tip);
      if (on_path.count(w)) continue;
      current.edges.push_back(e);
      current.vertices.push_back(w);
      if (t.contains(w)) {
        if (w > start) out.push_back(current);
      } else {
        on_path.insert(w);
        extend(start);
        on_path.erase(w);
      }
      current.edges.pop_back();
      current.vertices.pop_back();
    }
  };
  for (VertexId s : t.as_set()) {
    if (!g.has_vertex(s)) {
      throw Error(Errc::kUnknownVertex, "terminal id " + std::to_string(s));
    }
    current = Path{{s}, {}};
    on_path = {s};
    extend(s);
  }
  auto signature = [](const Path& p) {
    std::vector<EdgeId> ids = p.edges;
    std::sort(ids.begin(), ids.end());
    return ids;
  };
  std::stable_sort(out.begin(), out.end(), [&](const Path& x, const Path& y) {
    return signature(x) < signature(y);
  });
  return out;
}

PathSystem brute_force_max_packing(const Multigraph& g, const TerminalSet& t,
                                   int max_edges) {
  const int m = g.num_edges();
  if (m > max_edges || m > 63) {
    throw Error(Errc::kSizeLimit, std::to_string(m) +
                                      " edges exceed the brute-force bound " +
                                      std::to_string(max_edges));
  }
  const std::vector<Path> paths = enumerate_tpaths(g, t);
  const std::vector<EdgeId> ids = g.edge_ids();
  auto index_of = [&](EdgeId e) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), e) -
                            ids.begin());
  };
  std::vector<int> ends(m, 0);  // terminal endpoints per edge
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edge(ids[i]);
    ends[i] = (t.contains(e.u) ? 1 : 0) + (t.contains(e.v) ? 1 : 0);
  }
  // Paths bucketed by their smallest edge index.
  std::vector<std::vector<std::pair<std::uint64_t, int>>> bucket(m);
  for (int k = 0; k < static_cast<int>(paths.size()); ++k) {
    std::uint64_t mask = 0;
    int low = m;
    for (EdgeId e : paths[k].edges) {
      int i = index_of(e);
      mask |= std::uint64_t{1} << i;
      low = std::min(low, i);
    }
    bucket[low].emplace_back(mask, k);
  }

  std::vector<int> chosen;
  std::vector<int> best;
  std::function<void(int, std::uint64_t)> search = [&](int i,
                                                       std::uint64_t used) {
    int open_ends = 0;
    for (int j = i; j < m; ++j) {
      if (!(used >> j & 1)) open_ends += ends[j];
    }
    if (chosen.size() + open_ends / 2 <= best.size()) return;
    if (i == m) {
      best = chosen;
      return;
    }
    for (const auto& [mask, k] : bucket[i]) {
      if (mask & used) continue;
      chosen.push_back(k);
      search(i + 1, used | mask);
      chosen.pop_back();
    }
    search(i + 1, used);
  };
  search(0, 0);
  PathSystem out;
  for (int k : best) out.push_back(paths[k]);
  return out;
}

namespace {

// Labels each vertex by its part (terminal id) or by its free component
// (-1 - component index).
struct PartitionIndex {
  std::map<VertexId, int> label;
  std::vector<VertexSet> components;

  PartitionIndex(const Multigraph& g, const TPartition& a)
      : components(free_components(g, a)) {
    for (const auto& [s, part] : a.parts) {
      for (VertexId v : part) label[v] = s;
    }
    for (int c = 0; c < static_cast<int>(components.size()); ++c) {
      for (VertexId v : components[c]) label[v] = -1 - c;
    }
  }

  bool in_part(VertexId v) const { return label.at(v) >= 0; }
};

enum class EdgeClass { kInside, kBetweenParts, kAtComponent };

struct Classified {
  EdgeClass kind;
  int component = -1;
};

Classified classify(const Multigraph& g, const PartitionIndex& idx,
                    EdgeId e) {
  const Edge& edge = g.edge(e);
  const int lu = idx.label.at(edge.u);
  const int lv = idx.label.at(edge.v);
  if (lu == lv) return {EdgeClass::kInside};
  if (lu >= 0 && lv >= 0) return {EdgeClass::kBetweenParts};
  const int free_label = lu < 0 ? lu : lv;
  return {EdgeClass::kAtComponent, -1 - free_label};
}

bool check_paths_and_crossings(const Multigraph& g, const TerminalSet& t,
                               const PathSystem& p, const PartitionIndex& idx) {
  for (const Path& path : p) {
    if (!check_tpath(g, t, path).empty()) return false;
  }
  if (!edge_disjoint(p)) return false;
  for (const Path& path : p) {
    std::vector<Classified> crossing;
    for (EdgeId e : path.edges) {
      Classified c = classify(g, idx, e);
      if (c.kind != EdgeClass::kInside) crossing.push_back(c);
    }
    if (crossing.size() == 1) {
      if (crossing[0].kind != EdgeClass::kBetweenParts) return false;
    } else if (crossing.size() == 2) {
      if (crossing[0].kind != EdgeClass::kAtComponent ||
          crossing[1].kind != EdgeClass::kAtComponent ||
          crossing[0].component != crossing[1].component) {
        return false;
      }
    } else {
      return false;
    }
  }
  return true;
}

// Unused edges of E(A): count between parts, and per free component.
struct Unused {
  int between_parts = 0;
  std::vector<int> at_component;
};

Unused unused_boundary(const Multigraph& g, const PathSystem& p,
                       const PartitionIndex& idx) {
  const EdgeSet used = path_edges(p);
  Unused out;
  out.at_component.assign(idx.components.size(), 0);
  for (const Edge& e : g.edges()) {
    if (used.count(e.id)) continue;
    Classified c = classify(g, idx, e.id);
    if (c.kind == EdgeClass::kBetweenParts) ++out.between_parts;
    if (c.kind == EdgeClass::kAtComponent) ++out.at_component[c.component];
  }
  return out;
}

}  // namespace

bool check_condition_weak(const Multigraph& g, const TerminalSet& t,
                          const PathSystem& p, const TPartition& a) {
  validate_partition(g, t, a);
  PartitionIndex idx(g, a);
  if (!check_paths_and_crossings(g, t, p, idx)) return false;
  Unused unused = unused_boundary(g, p, idx);
  if (unused.between_parts != 0) return false;
  return std::all_of(unused.at_component.begin(), unused.at_component.end(),
                     [](int n) { return n <= 1; });
}

bool check_condition_strong(const Multigraph& g, const TerminalSet& t,
                            const PathSystem& p, const TPartition& a) {
  validate_partition(g, t, a);
  PartitionIndex idx(g, a);
  if (!check_paths_and_crossings(g, t, p, idx)) return false;
  Unused unused = unused_boundary(g, p, idx);
  if (unused.between_parts != 0) return false;
  for (std::size_t c = 0; c < idx.components.size(); ++c) {
    const int expected = boundary_degree(g, idx.components[c]) % 2;
    if (unused.at_component[c] != expected) return false;
  }
  return true;
}

bool is_strongly_maximal(const Multigraph& g, const TerminalSet& t,
                         const PathSystem& p, int max_edges) {
  for (const Path& path : p) {
    if (!check_tpath(g, t, path).empty()) return false;
  }
  if (!edge_disjoint(p)) return false;
  return p.size() == brute_force_max_packing(g, t, max_edges).size();
}

}  // namespace tpaths
