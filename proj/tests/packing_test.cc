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

#include "tpaths/packing.h"

#include <gtest/gtest.h>

#include <functional>

#include "support/enumerate.h"
#include "support/fixtures.h"
#include "support/oracles.h"
#include "tpaths/error.h"
#include "tpaths/menger.h"
#include "tpaths/waves.h"

namespace tpaths {
namespace {

using testing::make_graph;
using testing::vid;

struct Case {
  Multigraph g;
  TerminalSet t;
};

std::vector<Case> eulerian_cases(int max_vertices, int max_edges) {
  testing::EnumBounds b;
  b.max_vertices = max_vertices;
  b.max_edges = max_edges;
  std::vector<Case> out;
  for (Multigraph& g : testing::enumerate_multigraphs(b)) {
    for (TerminalSet& t : testing::eulerian_terminal_sets(g, 2)) {
      out.push_back({g, t});
    }
  }
  return out;
}

bool all_linkable(const Multigraph& g, const TerminalSet& t) {
  for (VertexId s : t.ids()) {
    if (!linkability_check(g, t, s)) return false;
  }
  return true;
}

// t1 - v - t2 with t1=0, v=1, t2=2.
Multigraph small_path() { return make_graph(3, {{0, 1}, {1, 2}}); }

TEST(Linkability, Examples) {
  EXPECT_TRUE(linkability_check(small_path(), TerminalSet({0, 2}), 0));
  Instance h = testing::load("h_graph");
  EXPECT_TRUE(linkability_check(h.graph, h.terminals, vid(h.graph, "t1")));
  EXPECT_EQ(terminal_lambda(h.graph, h.terminals, vid(h.graph, "t1")), 1);
  Instance star = testing::load("k13");
  EXPECT_TRUE(linkability_check(star.graph, star.terminals, vid(star.graph, "a")));
  EXPECT_THROW(linkability_check(star.graph, star.terminals,
                                 vid(star.graph, "center")),
               Error);
}

TEST(Linkability, MatchesPathSearch) {
  for (const Case& c : eulerian_cases(4, 6)) {
    for (VertexId s : c.t.ids()) {
      ASSERT_EQ(linkability_check(c.g, c.t, s),
                testing::brute_linkable(c.g, c.t, s));
    }
  }
}

TEST(SplitOff, PathBecomesTerminalEdge) {
  SplitResult r = split_off(small_path(), TerminalSet({0, 2}), 1, 2);
  EXPECT_EQ(r.graph.num_edges(), 1);
  EXPECT_EQ(r.graph.degree(1), 0);
  EXPECT_EQ(r.record.replacement, 3);
  EXPECT_EQ(r.record.vertex, 1);
  const Edge& h = r.graph.edge(3);
  EXPECT_EQ(VertexSet({h.u, h.v}), (VertexSet{0, 2}));
}

TEST(SplitOff, HGraph) {
  Instance h = testing::load("h_graph");
  const Multigraph& g = h.graph;
  SplitResult r = split_off(g, h.terminals, 1, 3);
  const Edge& e = r.graph.edge(7);
  EXPECT_EQ(VertexSet({e.u, e.v}), (VertexSet{vid(g, "t1"), vid(g, "w")}));
  EXPECT_EQ(r.graph.degree(vid(g, "v")), g.degree(vid(g, "v")) - 2);
  EXPECT_TRUE(is_admissible(g, h.terminals, 1, 3));
}

TEST(SplitOff, Errors) {
  Instance tri = testing::load("triangle");
  EXPECT_THROW(split_off(tri.graph, tri.terminals, 1, 2), Error);
  Instance h = testing::load("h_graph");
  EXPECT_THROW(split_off(h.graph, h.terminals, 3, 4), Error);  // loop
  EXPECT_THROW(split_off(h.graph, h.terminals, 1, 1), Error);
  EXPECT_THROW(split_off(h.graph, h.terminals, 1, 5), Error);  // disjoint
}

TEST(IsAdmissible, DoubledStar) {
  // t1=0, v=1, t2=2 with every edge doubled.
  Multigraph g = make_graph(3, {{0, 1}, {1, 2}, {0, 1}, {1, 2}});
  TerminalSet t({0, 2});
  EXPECT_THROW(is_admissible(g, t, 1, 3), Error);
  EXPECT_TRUE(is_admissible(g, t, 1, 2));
  EXPECT_TRUE(is_admissible(small_path(), t, 1, 2));
}

TEST(SplitOff, PreservesParityOfInnerSets) {
  for (const Case& c : eulerian_cases(4, 6)) {
    for (VertexId v : c.g.vertices()) {
      if (c.t.contains(v)) continue;
      auto inc = c.g.incident(v);
      for (std::size_t i = 0; i < inc.size(); ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
          if (c.g.opposite(inc[i], v) == c.g.opposite(inc[j], v)) continue;
          Multigraph h = split_off(c.g, c.t, inc[i], inc[j]).graph;
          for (const VertexSet& x : testing::all_sides(c.g, {}, {})) {
            bool inner = std::none_of(x.begin(), x.end(), [&](VertexId u) {
              return c.t.contains(u);
            });
            if (!inner) continue;
            ASSERT_EQ(boundary_degree(h, x) % 2, boundary_degree(c.g, x) % 2);
          }
        }
      }
    }
  }
}

TEST(CompleteSplitting, Path) {
  CompleteSplitting cs = complete_splitting(small_path(), TerminalSet({0, 2}));
  EXPECT_EQ(cs.records.size(), 1u);
  EXPECT_EQ(cs.terminal_graph.num_edges(), 1);
  EXPECT_EQ(cs.terminal_graph.num_vertices(), 2);
  PathSystem p = lift_paths(cs.records, cs.terminal_graph);
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p[0].edges, (std::vector<EdgeId>{1, 2}));
}

TEST(CompleteSplitting, HGraph) {
  // The lowest partner of t1v is t2v, and that split keeps every lambda at
  // one; the doubled v-w edge is then a 2-cycle and is deleted.
  Instance h = testing::load("h_graph");
  const Multigraph& g = h.graph;
  CompleteSplitting cs = complete_splitting(g, h.terminals);
  ASSERT_EQ(cs.terminal_graph.num_edges(), 2);
  std::set<VertexSet> pairs;
  for (const Edge& e : cs.terminal_graph.edges()) pairs.insert({e.u, e.v});
  EXPECT_EQ(pairs, (std::set<VertexSet>{{vid(g, "t1"), vid(g, "t2")},
                                        {vid(g, "t3"), vid(g, "t4")}}));
  ASSERT_EQ(cs.records.size(), 3u);
  EXPECT_FALSE(cs.records[1].replacement.has_value());
  PathSystem p = lift_paths(cs.records, cs.terminal_graph);
  ASSERT_EQ(p.size(), 2u);
  for (const Path& q : p) EXPECT_EQ(check_tpath(g, h.terminals, q), "");
  EXPECT_TRUE(edge_disjoint(p));
  EXPECT_EQ(path_edges(p), (EdgeSet{1, 2, 5, 6}));

  // Forcing the other pairing is admissible too.
  EXPECT_TRUE(is_admissible(g, h.terminals, 1, 3));
}

TEST(CompleteSplitting, Theta) {
  Instance th = testing::load("theta");
  CompleteSplitting cs = complete_splitting(th.graph, th.terminals);
  EXPECT_EQ(cs.records.size(), 3u);
  EXPECT_EQ(cs.terminal_graph.num_edges(), 3);
  PathSystem p = lift_paths(cs.records, cs.terminal_graph);
  std::set<std::vector<EdgeId>> got;
  for (const Path& q : p) got.insert(q.edges);
  EXPECT_EQ(got, (std::set<std::vector<EdgeId>>{{1, 2}, {3, 4}, {5, 6}}));
}

TEST(CompleteSplitting, RequiresLinkability) {
  Instance chain = testing::load("chain");
  EXPECT_THROW(complete_splitting(chain.graph, chain.terminals), Error);
  Instance star = testing::load("k13");
  EXPECT_THROW(complete_splitting(star.graph, star.terminals), Error);
}

TEST(CompleteSplitting, KeepsDegreesAndLifts) {
  for (const Case& c : eulerian_cases(4, 7)) {
    Multigraph g = wave_elimination(c.g, c.t, c.t.ids()).final_graph();
    CompleteSplitting cs = complete_splitting(g, c.t);
    for (VertexId s : c.t.ids()) {
      ASSERT_EQ(cs.terminal_graph.degree(s), g.degree(s));
      ASSERT_EQ(terminal_lambda(cs.terminal_graph, c.t, s),
                terminal_lambda(g, c.t, s));
    }
    PathSystem p = lift_paths(cs.records, cs.terminal_graph);
    ASSERT_TRUE(edge_disjoint(p));
    for (const Path& q : p) ASSERT_EQ(check_tpath(g, c.t, q), "");
  }
}

TEST(Solve, Examples) {
  Instance tri = testing::load("triangle");
  PackingCertificate cert = solve(tri.graph, tri.terminals);
  EXPECT_EQ(cert.paths.size(), 3u);
  for (VertexId s : tri.terminals.ids()) {
    EXPECT_EQ(cert.cuts.at(s).side, VertexSet{s});
    EXPECT_EQ(cert.cuts.at(s).edges, boundary(tri.graph, {s}));
  }
  EXPECT_TRUE(verify_certificate(tri.graph, tri.terminals, cert).ok);

  Instance h = testing::load("h_graph");
  EXPECT_EQ(solve(h.graph, h.terminals).paths.size(), 2u);

  Instance star = testing::load("k13");
  EXPECT_THROW(solve(star.graph, star.terminals), Error);
}

TEST(Solve, CountMatchesHalfLambdaSumAndBruteForce) {
  for (const Case& c : eulerian_cases(4, 7)) {
    PackingCertificate cert = solve(c.g, c.t);
    int lambda_sum = 0;
    for (VertexId s : c.t.ids()) lambda_sum += terminal_lambda(c.g, c.t, s);
    ASSERT_EQ(2 * static_cast<int>(cert.paths.size()), lambda_sum);
    ASSERT_EQ(static_cast<int>(cert.paths.size()),
              testing::brute_max_tpaths(c.g, c.t));
    VerifyResult v = verify_certificate(c.g, c.t, cert);
    ASSERT_TRUE(v.ok) << v.reason << ": " << v.detail;
  }
}

TEST(VerifyCertificate, RejectsTampering) {
  Instance th = testing::load("theta");
  const Multigraph& g = th.graph;
  PackingCertificate cert = solve(g, th.terminals);
  ASSERT_TRUE(verify_certificate(g, th.terminals, cert).ok);

  PackingCertificate cut_path = cert;
  cut_path.paths[0].edges.pop_back();
  cut_path.paths[0].vertices.pop_back();
  EXPECT_EQ(verify_certificate(g, th.terminals, cut_path).reason, "bad-path");

  PackingCertificate dropped = cert;
  dropped.paths.pop_back();
  EXPECT_FALSE(verify_certificate(g, th.terminals, dropped).ok);

  PackingCertificate not_cut = cert;
  Cut& c = not_cut.cuts.begin()->second;
  c.edges.erase(c.edges.begin());
  EXPECT_EQ(verify_certificate(g, th.terminals, not_cut).reason, "not-a-cut");

  PackingCertificate missing = cert;
  missing.cuts.erase(missing.cuts.begin());
  EXPECT_EQ(verify_certificate(g, th.terminals, missing).reason,
            "missing-cut");

  PackingCertificate doubled = cert;
  doubled.paths.push_back(doubled.paths[0]);
  EXPECT_EQ(verify_certificate(g, th.terminals, doubled).reason,
            "not-edge-disjoint");
}

TEST(RemovableTPath, Examples) {
  Path p = removable_tpath(small_path(), TerminalSet({0, 2}), 0, 1);
  EXPECT_EQ(p.edges, (std::vector<EdgeId>{1, 2}));

  Instance h = testing::load("h_graph");
  const Multigraph& g = h.graph;
  Path q = removable_tpath(g, h.terminals, vid(g, "t1"), 1);
  EXPECT_EQ(check_tpath(g, h.terminals, q), "");
  EXPECT_EQ(q.edges.front(), 1);
  // Shortest first: t1-v-t2 already leaves t3-w-t4 behind.
  EXPECT_EQ(q.edges, (std::vector<EdgeId>{1, 2}));

  Instance th = testing::load("theta");
  Path r = removable_tpath(th.graph, th.terminals, vid(th.graph, "t1"), 3);
  EXPECT_EQ(r.edges, (std::vector<EdgeId>{3, 4}));
}

TEST(RemovableTPath, RecursionRebuildsACoveringSystem) {
  for (const Case& c : eulerian_cases(4, 7)) {
    if (!all_linkable(c.g, c.t)) continue;
    Multigraph g = c.g;
    PathSystem built;
    for (;;) {
      std::optional<std::pair<VertexId, EdgeId>> next;
      for (VertexId s : c.t.ids()) {
        if (g.degree(s) > 0) {
          next = {s, g.incident(s)[0]};
          break;
        }
      }
      if (!next) break;
      Path p = removable_tpath(g, c.t, next->first, next->second);
      ASSERT_EQ(check_tpath(g, c.t, p), "");
      built.push_back(p);
      g = g.without_edges(EdgeSet(p.edges.begin(), p.edges.end()));
      ASSERT_TRUE(is_inner_eulerian(g, c.t).inner_eulerian);
      ASSERT_TRUE(all_linkable(g, c.t));
    }
    ASSERT_EQ(built.size(), solve(c.g, c.t).paths.size());
  }
}

TEST(TightCut, Examples) {
  Multigraph chain = make_graph(3, {{0, 1}, {1, 2}});
  std::optional<Cut> c = tight_cut(chain, 0, {2}, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->edges, (EdgeSet{2}));

  // s=2=a=2=b=2=t; edge 3 is an a-b edge.
  Multigraph two =
      make_graph(4, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {2, 3}});
  std::optional<Cut> d = tight_cut(two, 0, {3}, 3);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->edges, (EdgeSet{3, 4}));

  Multigraph slack = make_graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {1, 2}});
  EXPECT_FALSE(tight_cut(slack, 0, {2}, 3));
  EXPECT_THROW(tight_cut(slack, 0, {2}, 1), Error);
}

// Every edge-disjoint system of s-targets paths covering delta(s).
std::vector<PathSystem> covering_systems(const Multigraph& g, VertexId s,
                                         const VertexSet& targets) {
  std::vector<PathSystem> out;
  std::vector<EdgeId> at(g.incident(s).begin(), g.incident(s).end());
  PathSystem current;
  EdgeSet used;
  std::function<void(std::size_t)> next_edge;
  std::function<void(Path&, VertexSet&, std::size_t)> extend =
      [&](Path& p, VertexSet& on, std::size_t i) {
        VertexId tip = p.last();
        if (targets.count(tip)) {
          current.push_back(p);
          next_edge(i + 1);
          current.pop_back();
          return;
        }
        for (EdgeId e : g.incident(tip)) {
          VertexId w = g.opposite(e, tip);
          if (used.count(e) || on.count(w)) continue;
          used.insert(e);
          on.insert(w);
          p.edges.push_back(e);
          p.vertices.push_back(w);
          extend(p, on, i);
          p.edges.pop_back();
          p.vertices.pop_back();
          on.erase(w);
          used.erase(e);
        }
      };
  next_edge = [&](std::size_t i) {
    if (i == at.size()) {
      out.push_back(current);
      return;
    }
    Path p{{s, g.opposite(at[i], s)}, {at[i]}};
    VertexSet on{s, p.last()};
    used.insert(at[i]);
    extend(p, on, i);
    used.erase(at[i]);
  };
  next_edge(0);
  return out;
}

TEST(TightCut, OrthogonalToEveryCoveringSystem) {
  int tight = 0;
  for (const Case& c : eulerian_cases(4, 6)) {
    for (VertexId s : c.t.ids()) {
      const VertexSet others = c.t.others(s);
      if (!linkability_check(c.g, c.t, s)) continue;
      std::vector<PathSystem> systems = covering_systems(c.g, s, others);
      for (const Edge& e : c.g.edges()) {
        if (e.u == s || e.v == s) continue;
        std::optional<Cut> cut = tight_cut(c.g, s, others, e.id);
        bool obligatory = std::all_of(
            systems.begin(), systems.end(),
            [&](const PathSystem& p) { return path_edges(p).count(e.id); });
        ASSERT_EQ(cut.has_value(), obligatory);
        if (!cut) continue;
        ++tight;
        ASSERT_TRUE(is_minimum_cut(c.g, {s}, others, *cut));
        for (const PathSystem& p : systems) ASSERT_TRUE(is_orthogonal(*cut, p));
      }
    }
  }
  EXPECT_GT(tight, 0);
}

}  // namespace
}  // namespace tpaths
