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

#include <algorithm>
#include <functional>
#include <numeric>

#include "tpaths/error.h"
#include "tpaths/menger.h"
#include "tpaths/waves.h"

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

void require_inner_eulerian(const Multigraph& g, const TerminalSet& t) {
  InnerEulerianReport report = is_inner_eulerian(g, t);
  if (!report.inner_eulerian) {
    throw Error(Errc::kPrecondition,
                "not inner Eulerian: " + g.name(*report.odd_vertex) +
                    " has odd degree");
  }
}

std::vector<int> all_lambdas(const Multigraph& g, const TerminalSet& t) {
  std::vector<int> out;
  out.reserve(t.ids().size());
  for (VertexId s : t.ids()) out.push_back(terminal_lambda(g, t, s));
  return out;
}

bool all_linkable(const Multigraph& g, const TerminalSet& t) {
  for (VertexId s : t.ids()) {
    if (!linkability_check(g, t, s)) return false;
  }
  return true;
}

// Drops cycles from a trail so that it becomes a simple path with the same
// ends.
Path shortcut(const Path& trail) {
  Path out{{trail.vertices.front()}, {}};
  for (std::size_t i = 0; i < trail.edges.size(); ++i) {
    VertexId w = trail.vertices[i + 1];
    auto seen = std::find(out.vertices.begin(), out.vertices.end(), w);
    if (seen != out.vertices.end()) {
      std::size_t pos = static_cast<std::size_t>(seen - out.vertices.begin());
      out.vertices.resize(pos + 1);
      out.edges.resize(pos);
    } else {
      out.vertices.push_back(w);
      out.edges.push_back(trail.edges[i]);
    }
  }
  return out;
}

}  // namespace

int terminal_lambda(const Multigraph& g, const TerminalSet& t, VertexId s) {
  require_terminal(g, t, s);
  VertexSet others = t.others(s);
  if (others.empty()) return 0;
  return lambda(g, VertexSet{s}, others);
}

bool linkability_check(const Multigraph& g, const TerminalSet& t, VertexId s) {
  return terminal_lambda(g, t, s) == g.degree(s);
}

SplitResult split_off(const Multigraph& g, const TerminalSet& t, EdgeId e,
                      EdgeId f) {
  if (e == f) throw Error(Errc::kInvalidArgument, "cannot split an edge off itself");
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  VertexSet ends_a{a.u, a.v};
  VertexSet shared;
  for (VertexId v : {b.u, b.v}) {
    if (ends_a.count(v)) shared.insert(v);
  }
  if (shared.empty()) {
    throw Error(Errc::kInvalidArgument, "edges " + std::to_string(e) + " and " +
                                            std::to_string(f) +
                                            " share no endpoint");
  }
  if (shared.size() == 2) {
    throw Error(Errc::kInvalidArgument, "splitting parallel edges " +
                                            std::to_string(e) + " and " +
                                            std::to_string(f) +
                                            " would create a loop");
  }
  const VertexId v = *shared.begin();
  if (t.contains(v)) {
    throw Error(Errc::kInvalidArgument,
                "shared vertex " + g.name(v) + " is a terminal");
  }
  SplitRecord record;
  record.vertex = v;
  record.first = e;
  record.second = f;
  record.first_end = g.opposite(e, v);
  record.second_end = g.opposite(f, v);
  record.replacement = g.max_edge_id() + 1;
  Multigraph out = g.without_edges({e, f}).with_edge(
      {*record.replacement, record.first_end, record.second_end});
  return {std::move(out), record};
}

bool is_admissible(const Multigraph& g, const TerminalSet& t, EdgeId e,
                   EdgeId f) {
  std::vector<int> before = all_lambdas(g, t);
  SplitResult split = split_off(g, t, e, f);
  return all_lambdas(split.graph, t) == before;
}

CompleteSplitting complete_splitting(const Multigraph& g,
                                     const TerminalSet& t) {
  require_inner_eulerian(g, t);
  if (!all_linkable(g, t)) {
    throw Error(Errc::kPrecondition,
                "some terminal is not linkable; eliminate waves first");
  }
  const std::vector<int> target = all_lambdas(g, t);
  Multigraph h = g;
  std::vector<SplitRecord> records;
  for (VertexId v : g.vertices()) {
    if (t.contains(v)) continue;
    while (h.degree(v) > 0) {
      auto inc = h.incident(v);
      const EdgeId e = inc.front();
      const VertexId e_end = h.opposite(e, v);
      bool done = false;
      bool only_parallel = true;
      for (std::size_t k = 1; k < inc.size() && !done; ++k) {
        const EdgeId f = inc[k];
        if (h.opposite(f, v) == e_end) continue;
        only_parallel = false;
        SplitResult split = split_off(h, t, e, f);
        if (all_lambdas(split.graph, t) == target) {
          records.push_back(split.record);
          h = std::move(split.graph);
          done = true;
        }
      }
      if (done) continue;
      if (!only_parallel) {
        throw Error(Errc::kPrecondition,
                    "no admissible partner for edge " + std::to_string(e) +
                        " at " + g.name(v));
      }
      // Every edge at v goes to the same neighbour: the pair is a 2-cycle no
      // path can use.
      const EdgeId f = inc[1];
      Multigraph next = h.without_edges({e, f});
      if (all_lambdas(next, t) != target) {
        throw Error(Errc::kPrecondition,
                    "deleting a parallel pair at " + g.name(v) +
                        " changed a terminal connectivity");
      }
      records.push_back({v, e, f, e_end, e_end, std::nullopt});
      h = std::move(next);
    }
  }
  VertexSet keep;
  for (VertexId v : h.vertices()) {
    if (t.contains(v)) keep.insert(v);
  }
  std::vector<Edge> edges = h.edges();
  return {Multigraph::from_parts(h, keep, std::move(edges)),
          std::move(records)};
}

PathSystem lift_paths(const std::vector<SplitRecord>& records,
                      const Multigraph& terminal_graph) {
  std::map<EdgeId, const SplitRecord*> by_replacement;
  for (const SplitRecord& r : records) {
    if (r.replacement) by_replacement[*r.replacement] = &r;
  }
  std::function<void(EdgeId, VertexId, VertexId, Path&)> expand =
      [&](EdgeId h, VertexId from, VertexId to, Path& out) {
        auto it = by_replacement.find(h);
        if (it == by_replacement.end()) {
          out.edges.push_back(h);
          out.vertices.push_back(to);
          return;
        }
        const SplitRecord& r = *it->second;
        if (from == r.first_end) {
          expand(r.first, from, r.vertex, out);
          expand(r.second, r.vertex, to, out);
        } else {
          expand(r.second, from, r.vertex, out);
          expand(r.first, r.vertex, to, out);
        }
      };
  PathSystem out;
  for (const Edge& e : terminal_graph.edges()) {
    Path trail{{e.u}, {}};
    expand(e.id, e.u, e.v, trail);
    out.push_back(shortcut(trail));
  }
  return out;
}

std::map<VertexId, std::vector<std::pair<int, EdgeId>>>
PackingCertificate::choices() const {
  std::map<VertexId, std::vector<std::pair<int, EdgeId>>> out;
  for (const auto& [s, cut] : cuts) {
    auto& chosen = out[s];
    for (int k = 0; k < static_cast<int>(paths.size()); ++k) {
      const Path& p = paths[k];
      if (p.first() != s && p.last() != s) continue;
      for (EdgeId e : p.edges) {
        if (cut.edges.count(e)) {
          chosen.emplace_back(k, e);
          break;
        }
      }
    }
  }
  return out;
}

PackingCertificate solve(const Multigraph& g, const TerminalSet& t) {
  if (t.empty()) throw Error(Errc::kInvalidArgument, "terminal set is empty");
  for (VertexId s : t.ids()) require_terminal(g, t, s);
  require_inner_eulerian(g, t);

  PackingCertificate cert;
  EdgeSet peeled;
  for (const Edge& e : g.edges()) {
    if (t.contains(e.u) && t.contains(e.v)) {
      peeled.insert(e.id);
      cert.paths.push_back(Path{{e.u, e.v}, {e.id}});
    }
  }
  const Multigraph core = g.without_edges(peeled);
  EliminationRecord record = wave_elimination(core, t, t.ids());
  CompleteSplitting split = complete_splitting(record.final_graph(), t);
  PathSystem lifted = lift_paths(split.records, split.terminal_graph);
  for (Path& p : extend_through_waves(record, lifted)) {
    cert.paths.push_back(std::move(p));
  }
  for (const EliminationStep& step : record.steps) {
    cert.cuts[step.terminal] = make_cut(g, VertexSet{step.terminal},
                                        t.others(step.terminal),
                                        step.wave.cut.side);
  }
  return cert;
}

VerifyResult verify_certificate(const Multigraph& g, const TerminalSet& t,
                                const PackingCertificate& cert) {
  auto fail = [](std::string reason, std::string detail) {
    return VerifyResult{false, std::move(reason), std::move(detail)};
  };
  for (std::size_t k = 0; k < cert.paths.size(); ++k) {
    std::string err = check_tpath(g, t, cert.paths[k]);
    if (!err.empty()) return fail("bad-path", "path " + std::to_string(k) + ": " + err);
  }
  if (!edge_disjoint(cert.paths)) {
    return fail("not-edge-disjoint", "two paths share an edge");
  }
  for (const auto& [s, cut] : cert.cuts) {
    if (!t.contains(s)) {
      return fail("unknown-terminal", "cut given for non-terminal " +
                                          std::to_string(s));
    }
  }
  int lambda_sum = 0;
  bool premise = true;
  for (VertexId s : t.ids()) {
    const std::string& name = g.name(s);
    auto it = cert.cuts.find(s);
    if (it == cert.cuts.end()) return fail("missing-cut", "no cut for " + name);
    const Cut& cut = it->second;
    if (!cut.side.count(s)) {
      return fail("bad-side", "side of " + name + " does not contain it");
    }
    for (VertexId v : cut.side) {
      if (!g.has_vertex(v)) {
        return fail("bad-side", "side of " + name + " has an unknown vertex");
      }
      if (v != s && t.contains(v)) {
        return fail("bad-side",
                    "side of " + name + " contains terminal " + g.name(v));
      }
    }
    if (boundary(g, cut.side) != cut.edges) {
      return fail("not-a-cut", "edges listed for " + name +
                                   " are not the boundary of its side");
    }
    EdgeSet hit;
    for (const Path& p : cert.paths) {
      if (p.first() != s && p.last() != s) continue;
      int count = 0;
      for (EdgeId e : p.edges) {
        if (cut.edges.count(e)) {
          ++count;
          hit.insert(e);
        }
      }
      if (count != 1) {
        return fail("not-orthogonal", "a path at " + name + " meets its cut " +
                                          std::to_string(count) + " times");
      }
    }
    if (hit != cut.edges) {
      return fail("not-orthogonal",
                  "cut of " + name + " has an edge off its paths");
    }
    const int lam = terminal_lambda(g, t, s);
    if (static_cast<int>(cut.edges.size()) != lam) {
      return fail("not-minimum", "cut of " + name + " has " +
                                     std::to_string(cut.edges.size()) +
                                     " edges but lambda is " +
                                     std::to_string(lam));
    }
    lambda_sum += lam;
    premise = premise && lam == g.degree(s);
  }
  if (2 * static_cast<int>(cert.paths.size()) != lambda_sum) {
    return fail("count-mismatch", std::to_string(cert.paths.size()) +
                                      " paths but half the lambda sum is " +
                                      std::to_string(lambda_sum / 2.0));
  }
  if (premise) {
    const EdgeSet used = path_edges(cert.paths);
    for (VertexId s : t.ids()) {
      for (EdgeId e : g.incident(s)) {
        if (!used.count(e)) {
          return fail("not-covering", "edge " + std::to_string(e) + " at " +
                                          g.name(s) + " is not covered");
        }
      }
    }
  }
  return {};
}

Path removable_tpath(const Multigraph& g, const TerminalSet& t, VertexId s,
                     EdgeId e) {
  require_terminal(g, t, s);
  require_inner_eulerian(g, t);
  if (!all_linkable(g, t)) {
    throw Error(Errc::kPrecondition, "linkability fails for some terminal");
  }
  if (!g.has_edge(e)) {
    throw Error(Errc::kUnknownEdge, "edge id " + std::to_string(e));
  }
  const VertexId first = g.opposite(e, s);

  std::optional<Path> found;
  Path current{{s, first}, {e}};
  VertexSet on_path{s, first};
  // Depth-first enumeration of T-paths through e with exactly `length`
  // edges, lowest edge id first.
  std::function<bool(int)> search = [&](int length) -> bool {
    const VertexId tip = current.last();
    if (t.contains(tip)) {
      if (static_cast<int>(current.edges.size()) != length) return false;
      EdgeSet used(current.edges.begin(), current.edges.end());
      if (all_linkable(g.without_edges(used), t)) {
        found = current;
        return true;
      }
      return false;
    }
    if (static_cast<int>(current.edges.size()) >= length) return false;
    for (EdgeId f : g.incident(tip)) {
      VertexId w = g.opposite(f, tip);
      if (on_path.count(w)) continue;
      current.edges.push_back(f);
      current.vertices.push_back(w);
      on_path.insert(w);
      bool hit = search(length);
      on_path.erase(w);
      current.edges.pop_back();
      current.vertices.pop_back();
      if (hit) return true;
    }
    return false;
  };
  for (int length = 1; length <= g.num_edges(); ++length) {
    if (search(length)) return *found;
  }
  throw Error(Errc::kPrecondition,
              "no removable T-path through edge " + std::to_string(e));
}

std::optional<Cut> tight_cut(const Multigraph& g, VertexId s,
                             const VertexSet& targets, EdgeId e) {
  const VertexSet source{s};
  if (!g.has_edge(e)) {
    throw Error(Errc::kUnknownEdge, "edge id " + std::to_string(e));
  }
  const Edge& edge = g.edge(e);
  if (edge.u == s || edge.v == s) {
    throw Error(Errc::kPrecondition, "edge " + std::to_string(e) +
                                         " is incident with the source");
  }
  if (lambda(g, source, targets) != g.degree(s)) {
    throw Error(Errc::kPrecondition, "edges at the source cannot be covered");
  }
  const Multigraph rest = g.without_edges({e});
  if (lambda(rest, source, targets) == g.degree(s)) return std::nullopt;
  Cut smallest = min_cut_smallest(rest, source, targets);
  Cut cut{smallest.edges, smallest.side, false};
  cut.edges.insert(e);
  if (boundary(g, cut.side) != cut.edges) {
    throw Error(Errc::kPrecondition,
                "edge " + std::to_string(e) + " does not cross the cut");
  }
  cut.minimal = is_minimal_cut(g, source, targets, cut.side);
  return cut;
}

}  // namespace tpaths
