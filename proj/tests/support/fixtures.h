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

#ifndef TPATHS_TESTS_SUPPORT_FIXTURES_H_
#define TPATHS_TESTS_SUPPORT_FIXTURES_H_

#include <string>

#include "tpaths/graph_io.h"
#include "tpaths/multigraph.h"

namespace tpaths::testing {

inline std::string data_path(const std::string& file) {
  return std::string(TPATHS_TEST_DATA) + "/" + file;
}

inline Instance load(const std::string& stem) {
  return read_graph_file(data_path(stem + ".graph"));
}

inline VertexId vid(const Multigraph& g, const std::string& name) {
  return g.find_vertex(name).value();
}

}  // namespace tpaths::testing

#endif  // TPATHS_TESTS_SUPPORT_FIXTURES_H_
