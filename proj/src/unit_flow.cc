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

#include "unit_flow.h"

#include <algorithm>
#include <deque>

#include "tpaths/error.h"

namespace tpaths::internal {

UnitFlow::UnitFlow(const Multigraph& g, const VertexSet& sources,
                   const VertexSet& sinks)
    : g_(g),
      is_source_(g.universe_size(), false),
      is_sink_(g.universe_size(), false),
      flow_(g.num_edges(), 0),
      adj_(g.universe_size()) {
  for (VertexId v : sources) {
    if (!g.has_vertex(v)) {
      throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(v));
    }
    is_source_[v] = true;
  }
  for (VertexId v : sinks) {
    if (!g.has_vertex(v)) {
      throw Error(Errc::kUnknownVertex, "vertex id " + std::to_string(v));
    }
    if (is_source_[v]) {
      throw Error(Errc::kInvalidArgument,
                  "vertex " + g.name(v) + " is both source and sink");
    }
    is_sink_[v] = true;
  }
  const auto& edges = g.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    adj_[edges[i].u].push_back(i);
    adj_[edges[i].v].push_back(i);
  }
}

int UnitFlow::index_of(EdgeId e) const {
  const auto& edges = g_.edges();
  auto it = std::lower_bound(
      edges.begin(), edges.end(), e,
      [](const Edge& edge, EdgeId id) { return edge.id < id; });
  if (it == edges.end() || it->id != e) {
    throw Error(Errc::kUnknownEdge, "edge id " + std::to_string(e));
  }
  return static_cast<int>(it - edges.begin());
}

int UnitFlow::direction(int i, VertexId x) const {
  return g_.edges()[i].u == x ? 1 : -1;
}

bool UnitFlow::residual(int i, VertexId from) const {
  return flow_[i] != direction(i, from);
}

void UnitFlow::set_flow(EdgeId e, VertexId from) {
  int i = index_of(e);
  const Edge& edge = g_.edges()[i];
  if (edge.u != from && edge.v != from) {
    throw Error(Errc::kInvalidArgument, "edge " + std::to_string(e) +
                                            " does not leave the given vertex");
  }
  flow_[i] = direction(i, from);
}

void UnitFlow::load(const PathSystem& paths) {
  for (const Path& p : paths) {
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
      int i = index_of(p.edges[k]);
      if (flow_[i] != 0) {
        throw Error(Errc::kInvalidArgument,
                    "paths share edge " + std::to_string(p.edges[k]));
      }
      flow_[i] = direction(i, p.vertices[k]);
    }
  }
}

bool UnitFlow::augment() {
  const int n = g_.universe_size();
  std::vector<int> parent_edge(n, -1);
  std::vector<bool> seen(n, false);
  std::deque<VertexId> queue;
  for (VertexId v : g_.vertices()) {
    if (is_source_[v]) {
      seen[v] = true;
      queue.push_back(v);
    }
  }
  VertexId reached = -1;
  while (!queue.empty() && reached < 0) {
    VertexId x = queue.front();
    queue.pop_front();
    for (int i : adj_[x]) {
      if (!residual(i, x)) continue;
      const Edge& edge = g_.edges()[i];
      VertexId y = edge.u == x ? edge.v : edge.u;
      if (seen[y]) continue;
      seen[y] = true;
      parent_edge[y] = i;
      if (is_sink_[y]) {
        reached = y;
        break;
      }
      queue.push_back(y);
    }
  }
  if (reached < 0) return false;
  VertexId y = reached;
  while (!is_source_[y]) {
    int i = parent_edge[y];
    const Edge& edge = g_.edges()[i];
    VertexId x = edge.u == y ? edge.v : edge.u;
    int d = direction(i, x);
    flow_[i] = flow_[i] == -d ? 0 : d;
    y = x;
  }
  return true;
}

int UnitFlow::saturate() {
  while (augment()) {
  }
  return value();
}

int UnitFlow::value() const {
  int total = 0;
  for (VertexId v : g_.vertices()) {
    if (!is_source_[v]) continue;
    for (int i : adj_[v]) total += flow_[i] == direction(i, v) ? 1 : 0;
    for (int i : adj_[v]) total -= flow_[i] == -direction(i, v) ? 1 : 0;
  }
  return total;
}

PathSystem UnitFlow::decompose() const {
  PathSystem out;
  std::vector<bool> used(flow_.size(), false);
  auto next_out = [&](VertexId x) -> int {
    for (int i : adj_[x]) {
      if (!used[i] && flow_[i] == direction(i, x)) return i;
    }
    return -1;
  };
  for (VertexId s : g_.vertices()) {
    if (!is_source_[s]) continue;
    for (int first : adj_[s]) {
      if (used[first] || flow_[first] != direction(first, s)) continue;
      Path p{{s}, {}};
      int i = first;
      VertexId cur = s;
      for (;;) {
        used[i] = true;
        const Edge& edge = g_.edges()[i];
        VertexId w = edge.u == cur ? edge.v : edge.u;
        auto seen = std::find(p.vertices.begin(), p.vertices.end(), w);
        if (seen != p.vertices.end()) {
          std::size_t pos = static_cast<std::size_t>(seen - p.vertices.begin());
          p.vertices.resize(pos + 1);
          p.edges.resize(pos);
        } else {
          p.vertices.push_back(w);
          p.edges.push_back(edge.id);
        }
        cur = w;
        if (is_sink_[cur]) break;
        i = next_out(cur);
        if (i < 0) {
          throw Error(Errc::kPrecondition,
                      "flow is not conserved at vertex " + g_.name(cur));
        }
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

VertexSet UnitFlow::source_reachable() const {
  VertexSet out;
  std::vector<VertexId> stack;
  for (VertexId v : g_.vertices()) {
    if (is_source_[v]) {
      out.insert(v);
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (int i : adj_[x]) {
      if (!residual(i, x)) continue;
      const Edge& edge = g_.edges()[i];
      VertexId y = edge.u == x ? edge.v : edge.u;
      if (is_sink_[y]) continue;
      if (out.insert(y).second) stack.push_back(y);
    }
  }
  return out;
}

VertexSet UnitFlow::sink_coreachable() const {
  VertexSet out;
  std::vector<VertexId> stack;
  for (VertexId v : g_.vertices()) {
    if (is_sink_[v]) {
      out.insert(v);
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    VertexId y = stack.back();
    stack.pop_back();
    for (int i : adj_[y]) {
      const Edge& edge = g_.edges()[i];
      VertexId x = edge.u == y ? edge.v : edge.u;
      if (!residual(i, x)) continue;
      if (is_source_[x]) continue;
      if (out.insert(x).second) stack.push_back(x);
    }
  }
  return out;
}

}  // namespace tpaths::internal
