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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/enumerate.h"
#include "support/fixtures.h"
#include "support/oracles.h"
#include "tpaths/error.h"

namespace tpaths {
namespace {

using testing::make_graph;

Multigraph path_abc() { return make_graph(3, {{0, 1}, {1, 2}}); }

std::vector<Multigraph> small_graphs() {
  testing::EnumBounds b;
  b.max_vertices = 4;
  b.max_edges = 6;
  return testing::enumerate_multigraphs(b);
}

TEST(Enumerator, CountsConnectedSimpleGraphs) {
  testing::EnumBounds b;
  b.max_multiplicity = 1;
  b.max_edges = 10;
  for (auto [n, expected] : {std::pair{3, 2u}, {4, 6u}, {5, 21u}}) {
    b.min_vertices = b.max_vertices = n;
    EXPECT_EQ(testing::enumerate_multigraphs(b).size(), expected) << n;
  }
  // Multigraphs on two vertices: one per edge multiplicity.
  b.min_vertices = b.max_vertices = 2;
  b.max_multiplicity = 3;
  EXPECT_EQ(testing::enumerate_multigraphs(b).size(), 3u);
}

TEST(Multigraph, RejectsLoopsAndDuplicateIds) {
  EXPECT_THROW(Multigraph({"a"}, {{1, 0, 0}}), Error);
  EXPECT_THROW(Multigraph({"a", "b"}, {{1, 0, 1}, {1, 1, 0}}), Error);
  EXPECT_THROW(Multigraph({"a", "b"}, {{1, 0, 2}}), Error);
}

TEST(Multigraph, IncidenceIsSortedById) {
  Multigraph g({"a", "b"}, {{7, 0, 1}, {3, 1, 0}, {5, 0, 1}});
  std::vector<EdgeId> at(g.incident(0).begin(), g.incident(0).end());
  EXPECT_EQ(at, (std::vector<EdgeId>{3, 5, 7}));
  EXPECT_EQ(g.opposite(3, 0), 1);
  EXPECT_EQ(g.max_edge_id(), 7);
}

TEST(Boundary, PathExamples) {
  Multigraph g = path_abc();
  EXPECT_EQ(boundary(g, {0}), (EdgeSet{1}));
  EXPECT_EQ(boundary(g, {0, 2}), (EdgeSet{1, 2}));
  EXPECT_THROW(boundary(g, {9}), Error);
}

TEST(Boundary, TriangleTerminal) {
  Instance tri = testing::load("triangle");
  EXPECT_EQ(boundary_degree(tri.graph, {testing::vid(tri.graph, "a")}), 2);
}

TEST(Boundary, Handshake) {
  for (const Multigraph& g : small_graphs()) {
    for (const VertexSet& x : testing::all_sides(g, {}, {})) {
      int degree_sum = 0;
      int odd = 0;
      for (VertexId v : x) {
        degree_sum += g.degree(v);
        odd += g.degree(v) % 2;
      }
      const int d = boundary_degree(g, x);
      ASSERT_EQ(degree_sum, 2 * inner_edge_count(g, x) + d);
      ASSERT_EQ(d % 2, odd % 2);
    }
  }
}

TEST(Contract, PathAndTriangle) {
  Multigraph g = contract(path_abc(), {{{0, {0, 1}}}});
  EXPECT_EQ(g.num_vertices(), 2);
  ASSERT_EQ(g.num_edges(), 1);
  EXPECT_EQ(g.edges()[0], (Edge{2, 0, 2}));

  Instance tri = testing::load("triangle");
  Multigraph h = contract(tri.graph, {{{0, {0, 1}}}});
  EXPECT_EQ(h.num_edges(), 2);
  EXPECT_FALSE(h.has_edge(1));
  EXPECT_EQ(h.degree(0), 2);
  EXPECT_EQ(h.degree(2), 2);
}

TEST(Contract, K4MergesIntoParallelPairs) {
  Multigraph k4 =
      make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Multigraph g = contract(k4, {{{0, {0, 1}}}});
  EXPECT_EQ(g.degree(0), 4);
  EXPECT_EQ(g.degree(2), 3);
  EXPECT_EQ(g.degree(3), 3);
  EXPECT_EQ(g.num_edges(), 5);
  EXPECT_EQ(g.edge(4), (Edge{4, 0, 2}));  // b-c now joins a
  EXPECT_EQ(g.edge(6), (Edge{6, 2, 3}));
}

TEST(Contract, RejectsOverlappingParts) {
  Multigraph k4 =
      make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  ContractionFamily f;
  f.parts[0] = {0, 1};
  f.parts[2] = {2, 1};
  EXPECT_THROW(contract(k4, f), Error);
}

TEST(Contract, PreservesBoundaryOfUnionsOfParts) {
  for (const Multigraph& g : small_graphs()) {
    if (g.num_vertices() < 3) continue;
    ContractionFamily f;
    f.parts[0] = {0, 1};
    Multigraph h = contract(g, f);
    for (const VertexSet& y : testing::all_sides(h, {}, {})) {
      VertexSet expanded = y;
      if (y.count(0)) expanded.insert(1);
      ASSERT_EQ(boundary_degree(h, y), boundary_degree(g, expanded));
    }
  }
}

TEST(InnerEulerian, Examples) {
  Multigraph p = path_abc();
  EXPECT_TRUE(is_inner_eulerian(p, TerminalSet({0, 2})).inner_eulerian);
  Instance star = testing::load("k13");
  InnerEulerianReport r = is_inner_eulerian(star.graph, star.terminals);
  EXPECT_FALSE(r.inner_eulerian);
  EXPECT_EQ(star.graph.name(*r.odd_vertex), "center");
  Instance tri = testing::load("triangle");
  EXPECT_TRUE(is_inner_eulerian(tri.graph, tri.terminals).inner_eulerian);
}

void expect_valid_decomposition(const Multigraph& g, const TerminalSet& t,
                                const std::vector<DecompositionPart>& parts) {
  EdgeSet seen;
  for (const DecompositionPart& part : parts) {
    for (EdgeId e : part.path.edges) ASSERT_TRUE(seen.insert(e).second);
    if (part.kind == PartKind::kTPath) {
      ASSERT_EQ(check_tpath(g, t, part.path), "");
    } else {
      const Path& c = part.path;
      ASSERT_EQ(c.first(), c.last());
      ASSERT_EQ(check_walk(g, c), "");
      std::set<VertexId> inner(c.vertices.begin() + 1, c.vertices.end());
      ASSERT_EQ(inner.size(), c.edges.size()) << "cycle repeats a vertex";
    }
  }
  ASSERT_EQ(static_cast<int>(seen.size()), g.num_edges());
  for (VertexId s : t.ids()) {
    if (g.degree(s) != 1) continue;
    EdgeId e = g.incident(s)[0];
    bool in_path = std::any_of(parts.begin(), parts.end(), [&](auto& part) {
      return part.kind == PartKind::kTPath &&
             std::count(part.path.edges.begin(), part.path.edges.end(), e);
    });
    ASSERT_TRUE(in_path);
  }
}

TEST(EulerianDecomposition, Examples) {
  Instance tri = testing::load("triangle");
  TerminalSet one({0});
  auto parts = eulerian_decomposition(tri.graph, one);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].kind, PartKind::kCycle);

  auto single = eulerian_decomposition(path_abc(), TerminalSet({0, 2}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].kind, PartKind::kTPath);

  Instance theta = testing::load("theta");
  auto tp = eulerian_decomposition(theta.graph, theta.terminals);
  expect_valid_decomposition(theta.graph, theta.terminals, tp);
  ASSERT_EQ(tp.size(), 2u);
  int cycles = std::count_if(tp.begin(), tp.end(), [](auto& part) {
    return part.kind == PartKind::kCycle;
  });
  EXPECT_EQ(cycles, 1);
}

TEST(EulerianDecomposition, RejectsOddInnerVertex) {
  Instance star = testing::load("k13");
  EXPECT_THROW(eulerian_decomposition(star.graph, star.terminals), Error);
}

TEST(EulerianDecomposition, PartitionsEveryEnumeratedInstance) {
  for (const Multigraph& g : small_graphs()) {
    for (const TerminalSet& t : testing::eulerian_terminal_sets(g, 0)) {
      expect_valid_decomposition(g, t, eulerian_decomposition(g, t));
    }
  }
}

TEST(InnerEulerian, SurvivesTPathDeletion) {
  for (const Multigraph& g : small_graphs()) {
    for (const TerminalSet& t : testing::eulerian_terminal_sets(g, 2)) {
      for (const DecompositionPart& part : eulerian_decomposition(g, t)) {
        if (part.kind != PartKind::kTPath) continue;
        EdgeSet drop(part.path.edges.begin(), part.path.edges.end());
        ASSERT_TRUE(is_inner_eulerian(g.without_edges(drop), t).inner_eulerian);
      }
    }
  }
}

TEST(MinimalCut, AgreesWithEdgeMinimality) {
  for (const Multigraph& g : small_graphs()) {
    for (VertexId a : g.vertices()) {
      for (VertexId b : g.vertices()) {
        if (a == b) continue;
        for (const VertexSet& x : testing::all_sides(g, {a}, {b})) {
          ASSERT_EQ(is_minimal_cut(g, {a}, {b}, x),
                    testing::brute_edge_minimal(g, {a}, {b}, x));
        }
      }
    }
  }
}

TEST(PathChecks, ReportProblems) {
  Multigraph g = path_abc();
  TerminalSet t({0, 2});
  EXPECT_EQ(check_tpath(g, t, Path{{0, 1, 2}, {1, 2}}), "");
  EXPECT_NE(check_walk(g, Path{{0, 2}, {1}}), "");
  EXPECT_NE(check_tpath(g, t, Path{{0, 1}, {1}}), "");
  EXPECT_NE(check_tpath(g, TerminalSet({0, 1, 2}), Path{{0, 1, 2}, {1, 2}}),
            "");
  EXPECT_TRUE(edge_disjoint({Path{{0, 1}, {1}}, Path{{1, 2}, {2}}}));
  EXPECT_FALSE(edge_disjoint({Path{{0, 1}, {1}}, Path{{1, 0}, {1}}}));
}

TEST(Generator, DeterministicAndInnerEulerian) {
  GeneratorBounds b{4, 10, 4};
  Instance x = random_inner_eulerian(0, b);
  Instance y = random_inner_eulerian(0, b);
  EXPECT_EQ(x.graph, y.graph);
  EXPECT_EQ(x.terminals.ids(), y.terminals.ids());
  EXPECT_LE(x.graph.num_vertices(), 4);

  std::set<std::vector<std::pair<VertexId, VertexId>>> distinct;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Instance inst = random_inner_eulerian(seed);
    ASSERT_TRUE(is_inner_eulerian(inst.graph, inst.terminals).inner_eulerian);
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (const Edge& e : inst.graph.edges()) {
      ends.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(ends.begin(), ends.end());
    distinct.insert(ends);
  }
  EXPECT_GE(distinct.size(), 100u);
}

}  // namespace
}  // namespace tpaths
