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

#ifndef TPATHS_CLOSURE_H_
#define TPATHS_CLOSURE_H_

#include <vector>

#include "tpaths/multigraph.h"

namespace tpaths {

struct ClosureSystem {
  // Partition of E into cycles of G/T (T contracted to one vertex). Edges
  // joining two terminals are loops there and form singleton members.
  std::vector<EdgeSet> cycles;
  // Edge sets of the paths covering delta(t), for every t with d(t) > 1.
  std::vector<EdgeSet> witnesses;
  EdgeSet edges;
};

// Requires G inner Eulerian and lambda(t, T - t) == d(t) for every terminal.
ClosureSystem build_closure_system(const Multigraph& g, const TerminalSet& t);

// Throws Error(kInvalidArgument) unless the invariants hold.
void validate_closure_system(const ClosureSystem& sys);

// Least superset of f0 that contains every cycle or witness it meets.
EdgeSet c_close(const ClosureSystem& sys, const EdgeSet& f0);

// Partition of E into c-closed pieces, each the closure of the lowest edge
// not yet covered.
std::vector<EdgeSet> closed_partition(const ClosureSystem& sys);

}  // namespace tpaths

#endif  // TPATHS_CLOSURE_H_
