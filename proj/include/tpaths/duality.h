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

#ifndef TPATHS_DUALITY_H_
#define TPATHS_DUALITY_H_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tpaths/multigraph.h"

namespace tpaths {

// Normalised fraction with positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// {X_t : t in T}: disjoint vertex sets with X_t meeting T exactly in t.
// Parts need not be connected.
struct TPartition {
  std::map<VertexId, VertexSet> parts;

  VertexSet covered() const;
};

// Throws Error(kInvalidArgument) unless `a` is a T-partition of G.
void validate_partition(const Multigraph& g, const TerminalSet& t,
                        const TPartition& a);

// Components of G minus the union of the parts.
std::vector<VertexSet> free_components(const Multigraph& g,
                                       const TPartition& a);

struct ObstructionReport {
  struct Component {
    VertexSet vertices;
    int degree = 0;            // d(Y)
    bool obstructive = false;  // d(Y) odd
    // Contracting V - Y to one vertex v, no edge-disjoint cycles cover the
    // edges at v. Computed by building the covering when it exists.
    bool obstructive_extended = false;
    VertexSet odd_attachments;  // J: vertices of Y with an odd number of
                                // edges leaving Y
  };

  std::vector<Component> components;
  int obstructive_count = 0;
};

ObstructionReport obstructive_components(const Multigraph& g,
                                         const TerminalSet& t,
                                         const TPartition& a);

// (sum_t d(X_t) - o(G, A)) / 2.
Rational mader_bound(const Multigraph& g, const TerminalSet& t,
                     const TPartition& a);

struct MaderResult {
  Rational value;
  TPartition argmin;
};

// Exact minimum of mader_bound over all T-partitions, enumerating every map
// from V - T to T plus "free". The first minimiser in enumeration order wins.
MaderResult mader_min(const Multigraph& g, const TerminalSet& t,
                      int max_free_vertices = 8);

// Every T-path of G, oriented from its smaller terminal id, ordered by the
// sorted list of its edge ids.
std::vector<Path> enumerate_tpaths(const Multigraph& g, const TerminalSet& t);

// Maximum edge-disjoint T-path system by exhaustive branch and bound.
PathSystem brute_force_max_packing(const Multigraph& g, const TerminalSet& t,
                                   int max_edges = 14);

// Complementary slackness, weak form: every path crosses E(A) either in one
// edge joining two parts or in two edges at one free component; every edge
// joining two parts is used; every free component keeps at most one edge of
// its boundary unused.
bool check_condition_weak(const Multigraph& g, const TerminalSet& t,
                          const PathSystem& p, const TPartition& a);

// Strong form: the unused edges of E(A) are exactly one boundary edge per
// obstructive component.
bool check_condition_strong(const Multigraph& g, const TerminalSet& t,
                            const PathSystem& p, const TPartition& a);

// For finite systems strong maximality is maximum cardinality.
bool is_strongly_maximal(const Multigraph& g, const TerminalSet& t,
                         const PathSystem& p, int max_edges = 14);

}  // namespace tpaths

#endif  // TPATHS_DUALITY_H_
