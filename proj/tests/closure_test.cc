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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/enumerate.h"
#include "support/fixtures.h"
#include "support/oracles.h"
#include "tpaths/error.h"
#include "tpaths/packing.h"

namespace tpaths {
namespace {

using testing::make_graph;

struct Case {
  Multigraph g;
  TerminalSet t;
};

// Connected instances meeting the closure premises.
const std::vector<Case>& linkable_cases() {
  static const std::vector<Case> cases = [] {
    testing::EnumBounds b;
    b.max_vertices = 5;
    b.max_edges = 7;
    b.max_multiplicity = 2;
    std::vector<Case> out;
    for (Multigraph& g : testing::enumerate_multigraphs(b)) {
      for (TerminalSet& t : testing::eulerian_terminal_sets(g, 2)) {
        bool ok = true;
        for (VertexId s : t.ids()) ok = ok && linkability_check(g, t, s);
        if (ok) out.push_back({g, t});
      }
    }
    return out;
  }();
  return cases;
}

EdgeSet minus(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(out, out.end()));
  return out;
}

EdgeSet meet(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

Multigraph restrict(const Multigraph& g, const EdgeSet& keep) {
  EdgeSet drop;
  for (EdgeId e : g.edge_ids()) {
    if (!keep.count(e)) drop.insert(e);
  }
  return g.without_edges(drop);
}

TEST(CClose, Examples) {
  ClosureSystem cyc;
  cyc.cycles = {{1, 2, 3}};
  cyc.edges = {1, 2, 3};
  EXPECT_EQ(c_close(cyc, {2}), (EdgeSet{1, 2, 3}));
  EXPECT_EQ(c_close(cyc, {}), EdgeSet{});

  // O1 -- witness -- O2, with a seventh edge left out of the chain.
  ClosureSystem chain;
  chain.cycles = {{1, 2, 3}, {4, 5, 6}, {7}};
  chain.witnesses = {{3, 4}};
  chain.edges = {1, 2, 3, 4, 5, 6, 7};
  EXPECT_NO_THROW(validate_closure_system(chain));
  EXPECT_EQ(c_close(chain, {1}), (EdgeSet{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(c_close(chain, {7}), EdgeSet{7});
  EXPECT_THROW(c_close(chain, {8}), Error);
}

TEST(ClosureSystem, Validation) {
  ClosureSystem bad;
  bad.cycles = {{1, 2}, {2, 3}};
  bad.edges = {1, 2, 3};
  EXPECT_THROW(validate_closure_system(bad), Error);
  bad.cycles = {{1, 2}};
  EXPECT_THROW(validate_closure_system(bad), Error);
  bad.cycles = {{1, 2}, {3}};
  bad.witnesses = {{4}};
  EXPECT_THROW(validate_closure_system(bad), Error);
}

TEST(ClosureSystem, Preconditions) {
  Instance star = testing::load("k13");
  EXPECT_THROW(build_closure_system(star.graph, star.terminals), Error);
  // Two disjoint triangles, one terminal in each: inner Eulerian but the
  // terminals cannot reach each other.
  Multigraph two = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_THROW(build_closure_system(two, TerminalSet({0, 3})), Error);
}

TEST(ClosedPartition, Examples) {
  Multigraph two = make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  std::vector<EdgeSet> pieces = closed_partition(build_closure_system(two, {}));
  EXPECT_EQ(pieces, (std::vector<EdgeSet>{{1, 2, 3}, {4, 5, 6}}));

  // With two terminals per triangle the direct edge and the detour separate.
  EXPECT_EQ(closed_partition(build_closure_system(two, TerminalSet({0, 1, 3, 4})))
                .size(),
            4u);

  // Doubled path s-a-b-t: cycles and witnesses chain every edge together.
  Multigraph doubled =
      make_graph(4, {{0, 1}, {0, 1}, {0, 2}, {0, 2}, {1, 3}, {1, 3}});
  ClosureSystem sys = build_closure_system(doubled, TerminalSet({2, 3}));
  EXPECT_EQ(sys.cycles.size(), 3u);
  EXPECT_EQ(closed_partition(sys),
            (std::vector<EdgeSet>{{1, 2, 3, 4, 5, 6}}));

  Multigraph empty({"s", "t"}, {});
  EXPECT_TRUE(
      closed_partition(build_closure_system(empty, TerminalSet({0, 1}))).empty());
}

TEST(ClosureSystem, InvariantsOnEnumeratedInstances) {
  ASSERT_GT(linkable_cases().size(), 100u);
  for (const Case& c : linkable_cases()) {
    ClosureSystem sys = build_closure_system(c.g, c.t);
    ASSERT_NO_THROW(validate_closure_system(sys));
    for (const EdgeSet& o : sys.cycles) {
      // Each member is a cycle or a T-path of G: every inner vertex even.
      Multigraph sub = restrict(c.g, o);
      ASSERT_TRUE(is_inner_eulerian(sub, c.t).inner_eulerian);
    }
  }
}

TEST(CClose, IdempotentAndMonotone) {
  std::mt19937_64 rng(7);
  for (const Case& c : linkable_cases()) {
    ClosureSystem sys = build_closure_system(c.g, c.t);
    std::vector<EdgeId> ids(sys.edges.begin(), sys.edges.end());
    for (int trial = 0; trial < 4; ++trial) {
      EdgeSet f, g;
      for (EdgeId e : ids) {
        int r = static_cast<int>(rng() % 4);
        if (r == 0) f.insert(e);
        if (r <= 1) g.insert(e);
      }
      EdgeSet cf = c_close(sys, f);
      ASSERT_EQ(c_close(sys, cf), cf);
      ASSERT_TRUE(std::includes(cf.begin(), cf.end(), f.begin(), f.end()));
      EdgeSet cg = c_close(sys, g);
      ASSERT_TRUE(std::includes(cg.begin(), cg.end(), cf.begin(), cf.end()));
    }
  }
}

TEST(ClosedPartition, BooleanAlgebra) {
  for (const Case& c : linkable_cases()) {
    ClosureSystem sys = build_closure_system(c.g, c.t);
    std::vector<EdgeSet> pieces = closed_partition(sys);
    ASSERT_LE(pieces.size(), 7u);
    EdgeSet all;
    for (const EdgeSet& p : pieces) {
      ASSERT_EQ(c_close(sys, p), p);
      ASSERT_EQ(c_close(sys, {*p.begin()}), p);
      for (EdgeId e : p) ASSERT_TRUE(all.insert(e).second);
    }
    ASSERT_EQ(all, sys.edges);
    for (unsigned mask = 0; mask < (1u << pieces.size()); ++mask) {
      EdgeSet u;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (mask >> i & 1) u.insert(pieces[i].begin(), pieces[i].end());
      }
      ASSERT_EQ(c_close(sys, u), u);
      EdgeSet rest = minus(sys.edges, u);
      ASSERT_EQ(c_close(sys, rest), rest);
    }
    // Intersections of closures of single edges.
    for (EdgeId e : sys.edges) {
      for (EdgeId f : sys.edges) {
        EdgeSet m = meet(c_close(sys, {e}), c_close(sys, {f}));
        ASSERT_EQ(c_close(sys, m), m);
      }
    }
  }
}

TEST(ClosedPartition, PiecesInheritPremisesAndSolveIndependently) {
  for (const Case& c : linkable_cases()) {
    std::vector<EdgeSet> pieces = closed_partition(build_closure_system(c.g, c.t));
    PathSystem united;
    for (const EdgeSet& piece : pieces) {
      Multigraph sub = restrict(c.g, piece);
      ASSERT_TRUE(is_inner_eulerian(sub, c.t).inner_eulerian);
      for (VertexId s : c.t.ids()) ASSERT_TRUE(linkability_check(sub, c.t, s));
      PackingCertificate cert = solve(sub, c.t);
      united.insert(united.end(), cert.paths.begin(), cert.paths.end());
    }
    ASSERT_TRUE(edge_disjoint(united));
    for (const Path& p : united) ASSERT_EQ(check_tpath(c.g, c.t, p), "");
    // lambda = d everywhere, so the union covers every terminal edge.
    EdgeSet used = path_edges(united);
    for (VertexId s : c.t.ids()) {
      for (EdgeId e : c.g.incident(s)) ASSERT_TRUE(used.count(e));
    }
  }
}

}  // namespace
}  // namespace tpaths
