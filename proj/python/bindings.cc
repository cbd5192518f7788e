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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tpaths/closure.h"
#include "tpaths/duality.h"
#include "tpaths/error.h"
#include "tpaths/graph_io.h"
#include "tpaths/multigraph.h"
#include "tpaths/packing.h"

namespace py = pybind11;

namespace tpaths {
namespace {

std::vector<std::string> names(const Multigraph& g, const VertexSet& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

py::dict path_dict(const Multigraph& g, const Path& p) {
  py::dict d;
  std::vector<std::string> vs;
  for (VertexId v : p.vertices) vs.push_back(g.name(v));
  d["vertices"] = vs;
  d["edges"] = p.edges;
  return d;
}

py::dict certificate_dict(const Multigraph& g, const PackingCertificate& c) {
  py::list paths;
  for (const Path& p : c.paths) paths.append(path_dict(g, p));
  py::dict cuts;
  for (const auto& [s, cut] : c.cuts) {
    py::dict d;
    d["edges"] = std::vector<EdgeId>(cut.edges.begin(), cut.edges.end());
    d["side"] = names(g, cut.side);
    cuts[py::str(g.name(s))] = d;
  }
  py::dict out;
  out["paths"] = paths;
  out["cuts"] = cuts;
  return out;
}

}  // namespace
}  // namespace tpaths

PYBIND11_MODULE(_core, m) {
  using namespace tpaths;
  m.doc() = "Edge-disjoint T-path packing with certificates";

  static py::exception<Error> error_type(m, "TPathsError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (e.line() > 0) msg = "line " + std::to_string(e.line()) + ": " + msg;
      py::set_error(error_type, msg.c_str());
    } catch (const Error& e) {
      py::set_error(error_type, e.what());
    }
  });

  py::class_<Instance>(m, "Instance")
      .def_property_readonly("vertices",
                             [](const Instance& i) {
                               std::vector<std::string> out;
                               for (VertexId v : i.graph.vertices()) {
                                 out.push_back(i.graph.name(v));
                               }
                               return out;
                             })
      .def_property_readonly("terminals",
                             [](const Instance& i) {
                               std::vector<std::string> out;
                               for (VertexId v : i.terminals.ids()) {
                                 out.push_back(i.graph.name(v));
                               }
                               return out;
                             })
      .def_property_readonly(
          "edges",
          [](const Instance& i) {
            std::vector<std::tuple<EdgeId, std::string, std::string>> out;
            for (const Edge& e : i.graph.edges()) {
              out.emplace_back(e.id, i.graph.name(e.u), i.graph.name(e.v));
            }
            return out;
          })
      .def("to_text", [](const Instance& i) { return write_graph(i); })
      .def("to_dot", [](const Instance& i) { return to_dot(i); })
      .def("__repr__", [](const Instance& i) {
        return "<Instance " + std::to_string(i.graph.num_vertices()) +
               " vertices, " + std::to_string(i.graph.num_edges()) +
               " edges, " + std::to_string(i.terminals.size()) +
               " terminals>";
      });

  m.def("parse", [](const std::string& text) { return parse_graph(text); },
        py::arg("text"), "Parse the line-based graph format.");
  m.def("read", &read_graph_file, py::arg("path"));

  m.def(
      "is_inner_eulerian",
      [](const Instance& i) {
        return is_inner_eulerian(i.graph, i.terminals).inner_eulerian;
      },
      py::arg("instance"));

  m.def(
      "terminal_lambdas",
      [](const Instance& i) {
        std::map<std::string, std::pair<int, int>> out;
        for (VertexId s : i.terminals.ids()) {
          out[i.graph.name(s)] = {terminal_lambda(i.graph, i.terminals, s),
                                  i.graph.degree(s)};
        }
        return out;
      },
      py::arg("instance"),
      "Map terminal name -> (lambda(t, T - t), d(t)).");

  m.def(
      "solve",
      [](const Instance& i) {
        return certificate_dict(i.graph, solve(i.graph, i.terminals));
      },
      py::arg("instance"),
      "Maximum packing with per-terminal cuts, as plain dicts.");

  m.def(
      "certificate_json",
      [](const Instance& i) {
        return certificate_to_json(i.graph, solve(i.graph, i.terminals));
      },
      py::arg("instance"));

  m.def(
      "verify",
      [](const Instance& i, const std::string& json) {
        VerifyResult r = verify_certificate(
            i.graph, i.terminals, certificate_from_json(i.graph, json));
        return std::make_tuple(r.ok, r.reason, r.detail);
      },
      py::arg("instance"), py::arg("certificate_json"),
      "Returns (ok, reason, detail).");

  m.def(
      "mader_min",
      [](const Instance& i, int max_free_vertices) {
        MaderResult r = mader_min(i.graph, i.terminals, max_free_vertices);
        std::map<std::string, std::vector<std::string>> parts;
        for (const auto& [s, part] : r.argmin.parts) {
          parts[i.graph.name(s)] = names(i.graph, part);
        }
        return std::make_tuple(r.value.num(), r.value.den(), parts);
      },
      py::arg("instance"), py::arg("max_free_vertices") = 8,
      "Returns (numerator, denominator, partition).");

  m.def(
      "max_packing_size",
      [](const Instance& i, int max_edges) {
        return brute_force_max_packing(i.graph, i.terminals, max_edges).size();
      },
      py::arg("instance"), py::arg("max_edges") = 14,
      "Exhaustive maximum, for cross-checking small instances.");

  m.def(
      "decompose",
      [](const Instance& i) {
        return closed_partition(build_closure_system(i.graph, i.terminals));
      },
      py::arg("instance"));
}
