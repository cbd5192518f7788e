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

#include "tpaths/cli.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tpaths/closure.h"
#include "tpaths/duality.h"
#include "tpaths/error.h"
#include "tpaths/graph_io.h"
#include "tpaths/menger.h"
#include "tpaths/packing.h"
#include "tpaths/waves.h"

namespace tpaths::cli {
namespace {

using nlohmann::json;

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string format = "text";
  std::string cert_path;
  std::string source;
  std::string sink;
  bool certify = false;
  std::uint64_t seed = 0;
  int count = 100;
  GeneratorBounds bounds;
};

std::vector<std::string> names_of(const Multigraph& g, const VertexSet& vs) {
  std::vector<std::string> out;
  for (VertexId v : vs) out.push_back(g.name(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

std::string ids_text(const EdgeSet& edges) {
  std::vector<std::string> words;
  for (EdgeId e : edges) words.push_back(std::to_string(e));
  return "[" + join(words) + "]";
}

std::string path_text(const Multigraph& g, const Path& p) {
  std::string out = g.name(p.vertices[0]);
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    out += " -" + std::to_string(p.edges[i]) + "- " + g.name(p.vertices[i + 1]);
  }
  return out;
}

json path_json(const Multigraph& g, const Path& p) {
  std::vector<std::string> names;
  for (VertexId v : p.vertices) names.push_back(g.name(v));
  return {{"edges", p.edges}, {"vertices", names}};
}

json cut_json(const Multigraph& g, const Cut& c) {
  return {{"edges", std::vector<EdgeId>(c.edges.begin(), c.edges.end())},
          {"side", names_of(g, c.side)}};
}

VertexId vertex_arg(const Multigraph& g, const std::string& name) {
  std::optional<VertexId> v = g.find_vertex(name);
  if (!v) throw Error(Errc::kUnknownVertex, "unknown vertex '" + name + "'");
  return *v;
}

int cmd_check(const Instance& inst, const RunConfig& cfg, std::ostream& out) {
  const Multigraph& g = inst.graph;
  const TerminalSet& t = inst.terminals;
  InnerEulerianReport rep = is_inner_eulerian(g, t);
  json doc;
  doc["inner_eulerian"] = rep.inner_eulerian;
  std::ostringstream text;
  if (rep.inner_eulerian) {
    text << "inner Eulerian\n";
  } else {
    const std::string& odd = g.name(*rep.odd_vertex);
    doc["odd_vertex"] = odd;
    text << "not inner Eulerian: " << odd << " has odd degree\n";
  }
  json linkable = json::object();
  int lambda_sum = 0;
  for (VertexId s : t.ids()) {
    int lam = terminal_lambda(g, t, s);
    lambda_sum += lam;
    bool ok = lam == g.degree(s);
    linkable[g.name(s)] = ok;
    text << "terminal " << g.name(s) << ": "
         << (ok ? "linkable" : "not linkable") << " (lambda " << lam
         << ", degree " << g.degree(s) << ")\n";
  }
  doc["linkable"] = linkable;
  doc["half_lambda_sum"] = Rational(lambda_sum, 2).to_string();
  text << "half lambda sum: " << Rational(lambda_sum, 2).to_string() << "\n";
  if (cfg.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return rep.inner_eulerian ? kOk : kViolated;
}

int cmd_lambda(const Instance& inst, const RunConfig& cfg, std::ostream& out) {
  const Multigraph& g = inst.graph;
  json doc = json::object();
  for (VertexId s : inst.terminals.ids()) {
    int lam = terminal_lambda(g, inst.terminals, s);
    doc[g.name(s)] = {{"degree", g.degree(s)}, {"lambda", lam}};
    if (cfg.format != "json") {
      out << g.name(s) << " lambda " << lam << " degree " << g.degree(s)
          << "\n";
    }
  }
  if (cfg.format == "json") out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_mincut(const Instance& inst, const RunConfig& cfg, std::ostream& out) {
  const Multigraph& g = inst.graph;
  VertexId s = vertex_arg(g, cfg.source);
  VertexId t = vertex_arg(g, cfg.sink);
  if (s == t) throw Error(Errc::kInvalidArgument, "source equals sink");
  Cut small = min_cut_smallest(g, {s}, {t});
  Cut large = min_cut_largest(g, {s}, {t});
  if (cfg.format == "json") {
    json doc = {{"lambda", small.edges.size()},
                {"smallest", cut_json(g, small)},
                {"largest", cut_json(g, large)}};
    out << doc.dump(2) << "\n";
  } else {
    out << "lambda " << small.edges.size() << "\n";
    out << "smallest: edges " << ids_text(small.edges) << " side "
        << join(names_of(g, small.side)) << "\n";
    out << "largest: edges " << ids_text(large.edges) << " side "
        << join(names_of(g, large.side)) << "\n";
  }
  return kOk;
}

int cmd_waves(const Instance& inst, const RunConfig& cfg, std::ostream& out) {
  const Multigraph& g = inst.graph;
  json doc = json::object();
  for (VertexId s : inst.terminals.ids()) {
    Wave w = large_wave(g, inst.terminals, s);
    if (cfg.format == "json") {
      json paths = json::array();
      for (const Path& p : w.paths) paths.push_back(path_json(g, p));
      doc[g.name(s)] = {{"cut", cut_json(g, w.cut)},
                        {"paths", paths},
                        {"trivial", w.trivial()}};
      continue;
    }
    out << "wave at " << g.name(s) << (w.trivial() ? " (trivial)" : "")
        << ": cut " << ids_text(w.cut.edges) << " side "
        << join(names_of(g, w.cut.side)) << "\n";
    for (const Path& p : w.paths) out << "  " << path_text(g, p) << "\n";
  }
  if (cfg.format == "json") out << doc.dump(2) << "\n";
  return kOk;
}

EdgeSet all_cut_edges(const PackingCertificate& cert) {
  EdgeSet edges;
  for (const auto& [s, cut] : cert.cuts) {
    edges.insert(cut.edges.begin(), cut.edges.end());
  }
  return edges;
}

int cmd_pack(const Instance& inst, const RunConfig& cfg, std::ostream& out) {
  const Multigraph& g = inst.graph;
  PackingCertificate cert = solve(g, inst.terminals);
  if (cfg.format == "dot") {
    out << to_dot(inst, all_cut_edges(cert));
  } else if (cfg.certify || cfg.format == "json") {
    out << certificate_to_json(g, cert);
  } else {
    out << cert.paths.size() << " paths\n";
    for (const Path& p : cert.paths) out << "  " << path_text(g, p) << "\n";
  }
  return kOk;
}

int cmd_verify(const Instance& inst, const RunConfig& cfg, std::ostream& out) {
  std::ifstream in(cfg.cert_path);
  if (!in) throw Error(Errc::kInvalidArgument, "cannot open " + cfg.cert_path);
  std::stringstream buf;
  buf << in.rdbuf();
  PackingCertificate cert = certificate_from_json(inst.graph, buf.str());
  VerifyResult res = verify_certificate(inst.graph, inst.terminals, cert);
  if (cfg.format == "json") {
    json doc = {{"ok", res.ok}};
    if (!res.ok) {
      doc["reason"] = res.reason;
      doc["detail"] = res.detail;
    }
    out << doc.dump(2) << "\n";
  } else if (res.ok) {
    out << "verified: " << cert.paths.size() << " paths\n";
  } else {
    out << "rejected: " << res.reason << ": " << res.detail << "\n";
  }
  return res.ok ? kOk : kViolated;
}

int cmd_mader(const Instance& inst, const RunConfig& cfg, std::ostream& out) {
  const Multigraph& g = inst.graph;
  const TerminalSet& t = inst.terminals;
  MaderResult best = mader_min(g, t);
  ObstructionReport rep = obstructive_components(g, t, best.argmin);
  std::optional<std::size_t> packing;
  if (g.num_edges() <= 14) packing = brute_force_max_packing(g, t).size();
  if (cfg.format == "json") {
    json parts = json::object();
    for (const auto& [s, part] : best.argmin.parts) {
      parts[g.name(s)] = names_of(g, part);
    }
    json comps = json::array();
    for (const auto& c : rep.components) {
      comps.push_back({{"degree", c.degree},
                       {"obstructive", c.obstructive},
                       {"vertices", names_of(g, c.vertices)}});
    }
    json doc = {{"bound", best.value.to_string()},
                {"components", comps},
                {"partition", parts}};
    if (packing) doc["max_packing"] = *packing;
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "mader bound " << best.value.to_string() << "\n";
  for (const auto& [s, part] : best.argmin.parts) {
    out << "  X_" << g.name(s) << ": " << join(names_of(g, part)) << "\n";
  }
  for (const auto& c : rep.components) {
    out << "  free " << join(names_of(g, c.vertices)) << ": degree "
        << c.degree << (c.obstructive ? " (obstructive)" : "") << "\n";
  }
  if (packing) out << "max packing " << *packing << "\n";
  return kOk;
}

int cmd_decompose(const Instance& inst, const RunConfig& cfg,
                  std::ostream& out) {
  ClosureSystem sys = build_closure_system(inst.graph, inst.terminals);
  std::vector<EdgeSet> pieces = closed_partition(sys);
  if (cfg.format == "json") {
    json doc = json::array();
    for (const EdgeSet& p : pieces) {
      doc.push_back(std::vector<EdgeId>(p.begin(), p.end()));
    }
    out << doc.dump(2) << "\n";
  } else {
    out << pieces.size() << " pieces\n";
    for (const EdgeSet& p : pieces) out << "  " << ids_text(p) << "\n";
  }
  return kOk;
}

// Empty string when every cross-check agrees.
std::string fuzz_one(const Instance& inst) {
  const Multigraph& g = inst.graph;
  const TerminalSet& t = inst.terminals;
  PackingCertificate cert = solve(g, t);
  VerifyResult res = verify_certificate(g, t, cert);
  if (!res.ok) return "certificate rejected: " + res.reason + ": " + res.detail;
  const std::size_t n = cert.paths.size();
  if (g.num_edges() <= 14) {
    std::size_t best = brute_force_max_packing(g, t).size();
    if (best != n) {
      return "solver found " + std::to_string(n) + " paths, brute force " +
             std::to_string(best);
    }
  }
  if (g.num_vertices() - t.size() <= 8) {
    Rational bound = mader_min(g, t).value;
    if (bound != Rational(static_cast<std::int64_t>(n))) {
      return "solver found " + std::to_string(n) + " paths, Mader bound " +
             bound.to_string();
    }
  }
  return "";
}

int cmd_fuzz(const RunConfig& cfg, std::ostream& out) {
  for (int i = 0; i < cfg.count; ++i) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
    Instance inst = random_inner_eulerian(seed, cfg.bounds);
    std::string mismatch = fuzz_one(inst);
    if (mismatch.empty()) continue;
    if (cfg.format == "json") {
      json doc = {{"graph", write_graph(inst)},
                  {"index", i},
                  {"mismatch", mismatch},
                  {"seed", seed}};
      out << doc.dump(2) << "\n";
    } else {
      out << "mismatch at instance " << i << " (seed " << seed
          << "): " << mismatch << "\n"
          << write_graph(inst);
    }
    return kViolated;
  }
  if (cfg.format == "json") {
    out << json{{"instances", cfg.count}, {"mismatches", 0}}.dump(2) << "\n";
  } else {
    out << cfg.count << " instances, no mismatch\n";
  }
  return kOk;
}

int cmd_dot(const Instance& inst, std::ostream& out) {
  EdgeSet cut_edges;
  if (is_inner_eulerian(inst.graph, inst.terminals).inner_eulerian &&
      !inst.terminals.empty()) {
    cut_edges = all_cut_edges(solve(inst.graph, inst.terminals));
  }
  out << to_dot(inst, cut_edges);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Edge-disjoint T-path packing with certificates", "tpaths"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("graph", cfg.input, "Graph file")->required();
    return sub;
  };
  with_input(app.add_subcommand("check", "Inner Eulerian and linkability"));
  with_input(app.add_subcommand("lambda", "lambda(t, T - t) and d(t)"));
  CLI::App* mincut =
      with_input(app.add_subcommand("mincut", "Extreme minimum st-cuts"));
  mincut->add_option("s", cfg.source)->required();
  mincut->add_option("t", cfg.sink)->required();
  with_input(app.add_subcommand("waves", "Large wave at every terminal"));
  CLI::App* pack = with_input(app.add_subcommand("pack", "Solve the packing"));
  pack->add_flag("--certify", cfg.certify, "Emit the JSON certificate");
  CLI::App* verify =
      with_input(app.add_subcommand("verify", "Check a certificate"));
  verify->add_option("cert", cfg.cert_path)->required();
  with_input(app.add_subcommand("mader", "Minimum Mader bound"));
  with_input(app.add_subcommand("decompose", "Closed-piece decomposition"));
  with_input(app.add_subcommand("dot", "Graphviz output"));
  CLI::App* fuzz = app.add_subcommand("fuzz", "Randomised cross-checks");
  fuzz->add_option("--seed", cfg.seed);
  fuzz->add_option("--count", cfg.count)->check(CLI::NonNegativeNumber);
  fuzz->add_option("--max-vertices", cfg.bounds.max_vertices)
      ->check(CLI::Range(2, 12));
  fuzz->add_option("--max-edges", cfg.bounds.max_edges)
      ->check(CLI::Range(1, 40));
  fuzz->add_option("--max-terminals", cfg.bounds.max_terminals)
      ->check(CLI::Range(2, 12));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();
  const bool dot_ok = cfg.subcommand == "pack" || cfg.subcommand == "dot";
  if (cfg.format == "dot" && !dot_ok) {
    err << "error: --format dot applies to pack and dot only\n";
    return kInputError;
  }

  try {
    if (cfg.subcommand == "fuzz") return cmd_fuzz(cfg, out);
    Instance inst = read_graph_file(cfg.input);
    const std::string& cmd = cfg.subcommand;
    if (cmd == "check") return cmd_check(inst, cfg, out);
    if (cmd == "lambda") return cmd_lambda(inst, cfg, out);
    if (cmd == "mincut") return cmd_mincut(inst, cfg, out);
    if (cmd == "waves") return cmd_waves(inst, cfg, out);
    if (cmd == "pack") return cmd_pack(inst, cfg, out);
    if (cmd == "verify") return cmd_verify(inst, cfg, out);
    if (cmd == "mader") return cmd_mader(inst, cfg, out);
    if (cmd == "decompose") return cmd_decompose(inst, cfg, out);
    return cmd_dot(inst, out);
  } catch (const ParseError& e) {
    err << cfg.input << ":" << e.line() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::kPrecondition ? kViolated : kInputError;
  }
}

}  // namespace tpaths::cli
