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

#ifndef TPATHS_MULTIGRAPH_H_
#define TPATHS_MULTIGRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tpaths {

using VertexId = int;
using EdgeId = int;
using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Finite undirected multigraph without loops.
//
// Vertices are drawn from a fixed universe [0, universe_size()) that carries
// the vertex names; contraction removes vertices from the graph but never
// renumbers the survivors. Edge ids are arbitrary distinct integers and stay
// attached to an edge for its whole life. Every accessor that returns a
// collection returns it in ascending id order.
class Multigraph {
 public:
  Multigraph() = default;

  // All named vertices are present. Throws Error on loops, duplicate edge ids
  // or endpoints outside the universe.
  Multigraph(std::vector<std::string> vertex_names, std::vector<Edge> edges);

  // Same universe as `universe`, restricted to `present` vertices.
  static Multigraph from_parts(const Multigraph& universe,
                               const VertexSet& present,
                               std::vector<Edge> edges);

  int universe_size() const { return static_cast<int>(names_.size()); }
  const std::string& name(VertexId v) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<EdgeId> edge_ids() const;
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const;
  VertexId opposite(EdgeId e, VertexId v) const;
  std::span<const EdgeId> incident(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

  // Largest edge id in use, 0 for an edgeless graph.
  EdgeId max_edge_id() const;

  Multigraph without_edges(const EdgeSet& removed) const;
  Multigraph with_edge(Edge added) const;

  // Connected components (including isolated vertices), each sorted, ordered
  // by their smallest vertex.
  std::vector<VertexSet> components() const;
  VertexSet component_of(VertexId v) const;

  // Union of the components that meet `seeds`.
  VertexSet components_meeting(const VertexSet& seeds) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b);

 private:
  void index();

  std::vector<std::string> names_;
  std::vector<bool> present_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;                   // sorted by id
  std::vector<std::vector<EdgeId>> incident_;  // per universe vertex
};

// Ordered set of terminal vertices. Order is the caller's (file order for
// parsed instances) and drives deterministic processing orders elsewhere.
class TerminalSet {
 public:
  TerminalSet() = default;
  explicit TerminalSet(std::vector<VertexId> ids);

  const std::vector<VertexId>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(VertexId v) const { return members_.count(v) != 0; }
  const VertexSet& as_set() const { return members_; }

  // T - t.
  VertexSet others(VertexId t) const;

 private:
  std::vector<VertexId> ids_;
  VertexSet members_;
};

// An edge set C together with a designated side X such that C = delta(X).
struct Cut {
  EdgeSet edges;
  VertexSet side;
  bool minimal = false;

  friend bool operator==(const Cut&, const Cut&) = default;
};

// A path given by its vertex sequence and the edges between consecutive
// vertices. A path of length zero has one vertex and no edges.
struct Path {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  VertexId first() const { return vertices.front(); }
  VertexId last() const { return vertices.back(); }
  Path reversed() const;

  friend bool operator==(const Path&, const Path&) = default;
};

using PathSystem = std::vector<Path>;

// Family {X_u : u in U} for contraction. Keys are the roots.
struct ContractionFamily {
  std::map<VertexId, VertexSet> parts;
};

// delta_G(X): edges with exactly one endpoint in X.
EdgeSet boundary(const Multigraph& g, const VertexSet& x);
int boundary_degree(const Multigraph& g, const VertexSet& x);

// Number of edges with both endpoints in X.
int inner_edge_count(const Multigraph& g, const VertexSet& x);

// G/F: contracts each part to its root and drops the resulting loops.
Multigraph contract(const Multigraph& g, const ContractionFamily& family);

// Whether delta(side) is a minimal cut between the vertex sets `a` and `b`:
// side contains `a`, avoids `b`, and after identifying `a` and `b` to single
// vertices both shores are connected. Only components meeting a or b count.
bool is_minimal_cut(const Multigraph& g, const VertexSet& a,
                    const VertexSet& b, const VertexSet& side);

// Builds the Cut record for delta(side) between `a` and `b`.
Cut make_cut(const Multigraph& g, const VertexSet& a, const VertexSet& b,
             const VertexSet& side);

struct InnerEulerianReport {
  bool inner_eulerian = true;
  std::optional<VertexId> odd_vertex;  // set iff !inner_eulerian
};

InnerEulerianReport is_inner_eulerian(const Multigraph& g,
                                      const TerminalSet& t);

enum class PartKind { kCycle, kTPath };

struct DecompositionPart {
  PartKind kind;
  Path path;  // for cycles first() == last()
};

// Partition of E(G) into edge sets of cycles and T-paths. Requires G to be
// inner Eulerian with respect to `t`.
std::vector<DecompositionPart> eulerian_decomposition(const Multigraph& g,
                                                      const TerminalSet& t);

// Checks that a walk is consistent with G: consecutive vertices are joined
// by the listed edges and no edge repeats. Returns an empty string when fine.
std::string check_walk(const Multigraph& g, const Path& p);

// check_walk plus no repeated vertex.
std::string check_simple_path(const Multigraph& g, const Path& p);

// Checks a T-path: simple, distinct terminal ends, no inner terminal.
std::string check_tpath(const Multigraph& g, const TerminalSet& t,
                        const Path& p);

bool edge_disjoint(const PathSystem& paths);
EdgeSet path_edges(const PathSystem& paths);

struct GeneratorBounds {
  int max_vertices = 6;
  int max_edges = 10;
  int max_terminals = 4;
};

struct Instance {
  Multigraph graph;
  TerminalSet terminals;
};

// Seeded generator of inner Eulerian instances built as unions of random
// cycles and random T-paths. Identical seeds give identical instances on
// every platform.
Instance random_inner_eulerian(std::uint64_t seed,
                               const GeneratorBounds& bounds = {});

}  // namespace tpaths

#endif  // TPATHS_MULTIGRAPH_H_
