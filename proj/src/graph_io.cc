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

#include "tpaths/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tpaths/error.h"

namespace tpaths {
namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::optional<long long> parse_int(const std::string& s) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

Instance parse_graph(std::istream& in) {
  std::vector<std::string> names;
  std::map<std::string, VertexId> ids;
  std::vector<VertexId> terminals;
  std::vector<Edge> edges;
  std::set<EdgeId> edge_ids;

  auto declare = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<VertexId>(names.size()));
    if (fresh) names.push_back(name);
    return std::make_pair(it->second, fresh);
  };

  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> w = split_words(line);
    if (w.empty()) continue;
    auto arity = [&](std::size_t n) {
      if (w.size() != n) {
        throw ParseError(line_no, "'" + w[0] + "' expects " +
                                      std::to_string(n - 1) + " argument(s)");
      }
    };
    if (w[0] == "vertex") {
      arity(2);
      if (!declare(w[1]).second) {
        throw ParseError(line_no, "vertex '" + w[1] + "' declared twice");
      }
    } else if (w[0] == "terminal") {
      arity(2);
      VertexId v = declare(w[1]).first;
      if (std::find(terminals.begin(), terminals.end(), v) != terminals.end()) {
        throw ParseError(line_no, "terminal '" + w[1] + "' declared twice");
      }
      terminals.push_back(v);
    } else if (w[0] == "edge") {
      arity(4);
      std::optional<long long> id = parse_int(w[1]);
      if (!id || *id <= 0 || *id > 1'000'000'000) {
        throw ParseError(line_no, "edge id '" + w[1] +
                                      "' is not a positive integer");
      }
      if (!edge_ids.insert(static_cast<EdgeId>(*id)).second) {
        throw ParseError(line_no, "duplicate edge id " + w[1]);
      }
      Edge e{static_cast<EdgeId>(*id), 0, 0};
      for (int k : {2, 3}) {
        auto it = ids.find(w[k]);
        if (it == ids.end()) {
          throw ParseError(line_no, "undeclared vertex '" + w[k] + "'");
        }
        (k == 2 ? e.u : e.v) = it->second;
      }
      if (e.u == e.v) throw ParseError(line_no, "loop at '" + w[2] + "'");
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown directive '" + w[0] + "'");
    }
  }
  return Instance{Multigraph(std::move(names), std::move(edges)),
                  TerminalSet(std::move(terminals))};
}

Instance parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Instance read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot open " + path);
  return parse_graph(in);
}

std::string write_graph(const Instance& inst) {
  const Multigraph& g = inst.graph;
  std::ostringstream out;
  // Declaring every vertex first keeps ids stable across a round trip.
  for (VertexId v : g.vertices()) out << "vertex " << g.name(v) << "\n";
  for (VertexId v : inst.terminals.ids()) out << "terminal " << g.name(v) << "\n";
  for (const Edge& e : g.edges()) {
    out << "edge " << e.id << " " << g.name(e.u) << " " << g.name(e.v) << "\n";
  }
  return out.str();
}

std::string certificate_to_json(const Multigraph& g,
                                const PackingCertificate& cert) {
  nlohmann::json doc;
  doc["paths"] = nlohmann::json::array();
  for (const Path& p : cert.paths) {
    nlohmann::json names = nlohmann::json::array();
    for (VertexId v : p.vertices) names.push_back(g.name(v));
    doc["paths"].push_back({{"edges", p.edges}, {"vertices", names}});
  }
  doc["cuts"] = nlohmann::json::object();
  for (const auto& [s, cut] : cert.cuts) {
    std::vector<std::string> side;
    for (VertexId v : cut.side) side.push_back(g.name(v));
    std::sort(side.begin(), side.end());
    doc["cuts"][g.name(s)] = {
        {"edges", std::vector<EdgeId>(cut.edges.begin(), cut.edges.end())},
        {"side", side}};
  }
  return doc.dump(2) + "\n";
}

PackingCertificate certificate_from_json(const Multigraph& g,
                                         std::string_view text) {
  auto vertex = [&](const nlohmann::json& name) {
    std::optional<VertexId> v = g.find_vertex(name.get<std::string>());
    if (!v) {
      throw Error(Errc::kParse,
                  "unknown vertex '" + name.get<std::string>() + "'");
    }
    return *v;
  };
  try {
    nlohmann::json doc = nlohmann::json::parse(text);
    PackingCertificate cert;
    for (const nlohmann::json& p : doc.at("paths")) {
      Path path;
      for (const nlohmann::json& v : p.at("vertices")) {
        path.vertices.push_back(vertex(v));
      }
      path.edges = p.at("edges").get<std::vector<EdgeId>>();
      cert.paths.push_back(std::move(path));
    }
    for (const auto& [name, c] : doc.at("cuts").items()) {
      Cut cut;
      for (EdgeId e : c.at("edges").get<std::vector<EdgeId>>()) {
        cut.edges.insert(e);
      }
      for (const nlohmann::json& v : c.at("side")) cut.side.insert(vertex(v));
      cert.cuts[vertex(nlohmann::json(name))] = std::move(cut);
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::kParse, std::string("certificate: ") + e.what());
  }
}

std::string to_dot(const Instance& inst, const EdgeSet& cut_edges) {
  const Multigraph& g = inst.graph;
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << quoted(g.name(v));
    if (inst.terminals.contains(v)) {
      out << " [style=filled, fillcolor=lightblue, shape=box]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << quoted(g.name(e.u)) << " -- " << quoted(g.name(e.v))
        << " [label=\"" << e.id << "\"";
    if (cut_edges.count(e.id)) out << ", color=red, penwidth=2";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tpaths
