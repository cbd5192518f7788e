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

#ifndef TPATHS_GRAPH_IO_H_
#define TPATHS_GRAPH_IO_H_

#include <istream>
#include <string>
#include <string_view>

#include "tpaths/multigraph.h"
#include "tpaths/packing.h"

namespace tpaths {

// Line format, '#' starts a comment:
//   vertex <name>
//   terminal <name>        (declares the vertex if it is new)
//   edge <id> <u> <v>      (positive unique id, endpoints declared earlier)
// Throws ParseError carrying the 1-based line number.
Instance parse_graph(std::istream& in);
Instance parse_graph(std::string_view text);
Instance read_graph_file(const std::string& path);

std::string write_graph(const Instance& inst);

// JSON with sorted keys and sorted id arrays; vertices appear by name.
std::string certificate_to_json(const Multigraph& g,
                                const PackingCertificate& cert);
// Throws Error(kParse) on malformed documents or unknown names.
PackingCertificate certificate_from_json(const Multigraph& g,
                                         std::string_view text);

// Graphviz rendering. Terminals are filled; edges of `cut_edges` are red.
std::string to_dot(const Instance& inst, const EdgeSet& cut_edges = {});

}  // namespace tpaths

#endif  // TPATHS_GRAPH_IO_H_
