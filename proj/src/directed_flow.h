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

#ifndef TPATHS_SRC_DIRECTED_FLOW_H_
#define TPATHS_SRC_DIRECTED_FLOW_H_

#include <deque>
#include <vector>

namespace tpaths::internal {

// Plain Edmonds-Karp on a directed network with integer capacities.
class DirectedFlow {
 public:
  explicit DirectedFlow(int nodes) : adj_(nodes) {}

  // Returns the arc handle for `flow()`.
  int add_arc(int from, int to, int capacity) {
    arcs_.push_back({to, capacity, 0});
    adj_[from].push_back(static_cast<int>(arcs_.size()) - 1);
    arcs_.push_back({from, 0, 0});
    adj_[to].push_back(static_cast<int>(arcs_.size()) - 1);
    return static_cast<int>(arcs_.size()) - 2;
  }

  int max_flow(int source, int sink) {
    int total = 0;
    for (;;) {
      std::vector<int> parent(adj_.size(), -1);
      std::vector<bool> seen(adj_.size(), false);
      std::deque<int> queue{source};
      seen[source] = true;
      while (!queue.empty() && !seen[sink]) {
        int x = queue.front();
        queue.pop_front();
        for (int a : adj_[x]) {
          const Arc& arc = arcs_[a];
          if (arc.capacity - arc.flow <= 0 || seen[arc.to]) continue;
          seen[arc.to] = true;
          parent[arc.to] = a;
          queue.push_back(arc.to);
        }
      }
      if (!seen[sink]) return total;
      int bottleneck = -1;
      for (int y = sink; y != source; y = arcs_[parent[y] ^ 1].to) {
        const Arc& arc = arcs_[parent[y]];
        int room = arc.capacity - arc.flow;
        if (bottleneck < 0 || room < bottleneck) bottleneck = room;
      }
      for (int y = sink; y != source; y = arcs_[parent[y] ^ 1].to) {
        arcs_[parent[y]].flow += bottleneck;
        arcs_[parent[y] ^ 1].flow -= bottleneck;
      }
      total += bottleneck;
    }
  }

  int flow(int arc) const { return arcs_[arc].flow; }

 private:
  struct Arc {
    int to;
    int capacity;
    int flow;
  };

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace tpaths::internal

#endif  // TPATHS_SRC_DIRECTED_FLOW_H_
