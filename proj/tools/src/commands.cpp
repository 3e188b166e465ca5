#include "dynwalk_cli/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynwalk/error.hpp"
#include "dynwalk/fixtures.hpp"
#include "dynwalk/generators.hpp"
#include "dynwalk/oracle.hpp"
#include "dynwalk/pc.hpp"
#include "dynwalk/structure.hpp"
#include "dynwalk/theorems.hpp"
#include "dynwalk_cli/io.hpp"

namespace dynwalk::cli {

using nlohmann::json;

namespace {

/// Unusable arguments that CLI11 cannot catch (wrong positional counts).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge:
    case ErrorKind::UnknownColor:
    case ErrorKind::DuplicateEdgeId:
    case ErrorKind::DuplicateVertexId:
    case ErrorKind::DanglingEndpoint:
    case ErrorKind::UnknownId:
    case ErrorKind::SameVertex:
    case ErrorKind::MalformedWalk:
      return kUsage;
    case ErrorKind::InternalProofViolation:
      return kInternal;
    default:
      return kPrecondition;
  }
}

std::string pair_name(const HColoredMultigraph& g, VertexIndex u, VertexIndex v) {
  return g.vertex_id(u) + g.vertex_id(v);
}

std::vector<std::string> edge_ids(const HColoredMultigraph& g, const std::vector<EdgeIndex>& es) {
  std::vector<std::string> out;
  for (EdgeIndex e : es) out.push_back(g.edge(e).id);
  return out;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text.front() == '-') {
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

// ---- check ----------------------------------------------------------------

json report_json(const HColoredMultigraph& g, const HypothesisReport& r) {
  json vertices = json::array();
  for (const auto& vr : r.vertices) {
    json v{{"id", g.vertex_id(vr.vertex)},
           {"multipartite", vr.certificate.is_multipartite()},
           {"k", vr.k},
           {"dynamic_degree", vr.dynamic_degree}};
    json parts = json::array();
    for (const auto& part : vr.certificate.parts()) parts.push_back(edge_ids(g, part));
    v["parts"] = parts;
    if (const auto& w = vr.certificate.witness()) {
      v["witness"] = edge_ids(g, {(*w)[0], (*w)[1], (*w)[2]});
    }
    vertices.push_back(v);
  }
  json dyn_edges = json::array();
  for (const auto& [u, v] : r.dynamic.edges()) dyn_edges.push_back({g.vertex_id(u), g.vertex_id(v)});

  json applicable = json::array();
  for (const auto& a : r.applicable) {
    json item{{"goal", goal_token(a.goal)}};
    if (a.d) item["d"] = *a.d;
    applicable.push_back(item);
  }
  json rejected = json::object();
  const std::size_t d = r.min_dynamic_degree.value_or(0);
  for (Goal goal : all_goals()) {
    if (auto why = premise_failure(g, r, goal, d)) rejected[goal_token(goal)] = *why;
  }
  json doc{{"vertex_count", r.vertex_count},
           {"edge_count", g.edge_count()},
           {"vertices", vertices},
           {"dynamic_edges", dyn_edges},
           {"all_multipartite", r.all_multipartite},
           {"all_k_at_least_2", r.all_k_at_least_2},
           {"some_k_at_least_3", r.some_k_at_least_3},
           {"all_k_at_least_3", r.all_k_at_least_3},
           {"dynamic_graph_connected", r.dynamic_graph_connected},
           {"all_dynamic_degrees_even", r.all_dynamic_degrees_even},
           {"dynamic_matches_adjacent_pairs", r.dynamic_matches_adjacent_pairs},
           {"hamiltonian_path_premise", r.hamiltonian_path_premise},
           {"hamiltonian_connected_premise", r.hamiltonian_connected_premise},
           {"applicable", applicable},
           {"not_applicable", rejected}};
  doc["min_dynamic_degree"] = r.min_dynamic_degree ? json(*r.min_dynamic_degree) : json(nullptr);
  if (r.min_nondynamic_pair_sum) {
    doc["min_nondynamic_pair_sum"] = *r.min_nondynamic_pair_sum;
    doc["min_nondynamic_pair"] = {g.vertex_id(r.min_nondynamic_pair->first),
                                  g.vertex_id(r.min_nondynamic_pair->second)};
  } else {
    doc["min_nondynamic_pair_sum"] = nullptr;
  }
  return doc;
}

void print_report(std::ostream& out, const HColoredMultigraph& g, const HypothesisReport& r) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "vertices: " << r.vertex_count << ", edges: " << g.edge_count()
      << ", colors: " << g.pattern().size() << "\n";
  out << "G_dym edges:";
  const auto dyn_edges = r.dynamic.edges();
  if (dyn_edges.empty()) out << " none";
  for (const auto& [u, v] : dyn_edges) out << " " << pair_name(g, u, v);
  out << "\n";
  for (const auto& vr : r.vertices) {
    out << "  " << g.vertex_id(vr.vertex) << ": ";
    if (vr.certificate.is_multipartite()) {
      out << "k = " << vr.k << ", parts";
      for (const auto& part : vr.certificate.parts()) {
        out << " {";
        const auto ids = edge_ids(g, part);
        for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
        out << "}";
      }
    } else {
      const auto& w = *vr.certificate.witness();
      out << "not complete multipartite (" << g.edge(w[0]).id << " ~ " << g.edge(w[1]).id
          << " ~ " << g.edge(w[2]).id << " breaks transitivity of non-adjacency)";
    }
    out << ", dynamic degree " << vr.dynamic_degree << "\n";
  }
  out << "min dynamic degree: ";
  if (r.min_dynamic_degree) out << *r.min_dynamic_degree; else out << "-";
  out << "\n";
  out << "G_dym connected: " << yes(r.dynamic_graph_connected)
      << ", all dynamic degrees even: " << yes(r.all_dynamic_degrees_even) << "\n";
  out << "min degree sum over non-dynamic pairs: ";
  if (r.min_nondynamic_pair_sum) {
    out << *r.min_nondynamic_pair_sum << " ("
        << pair_name(g, r.min_nondynamic_pair->first, r.min_nondynamic_pair->second) << ")";
  } else {
    out << "- (every pair dynamic)";
  }
  out << "\n";
  out << "dynamic iff two edges of adjacent colors: " << yes(r.dynamic_matches_adjacent_pairs) << "\n";
  out << "hamiltonian H-path premise: " << yes(r.hamiltonian_path_premise)
      << ", hamiltonian-connected premise: " << yes(r.hamiltonian_connected_premise) << "\n";
  out << "applicable:";
  if (r.applicable.empty()) out << " none";
  for (const auto& a : r.applicable) {
    out << " " << goal_token(a.goal);
    if (a.d) out << "(d=" << *a.d << ")";
  }
  out << "\n";
  const std::size_t d = r.min_dynamic_degree.value_or(0);
  for (Goal goal : all_goals()) {
    if (auto why = premise_failure(g, r, goal, d)) {
      out << "  " << goal_token(goal) << ": " << *why << "\n";
    }
  }
}

int cmd_check(const std::string& path, bool as_json, std::ostream& out) {
  const auto g = load_graph(path);
  const auto report = hypothesis_report(g);
  if (as_json) {
    out << report_json(g, report).dump(2) << "\n";
  } else {
    print_report(out, g, report);
  }
  return kOk;
}

// ---- find -----------------------------------------------------------------

bool properly_colored(const HColoredMultigraph& g, const DynamicHWalk& walk) {
  std::vector<EdgeIndex> seq;
  for (const auto& s : walk.steps) seq.insert(seq.end(), s.bundle.begin(), s.bundle.end());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!walk.closed && i + 1 == seq.size()) break;
    if (g.color(seq[i]) == g.color(seq[(i + 1) % seq.size()])) return false;
  }
  return true;
}

int cmd_find(const std::string& path, const std::string& goal_name, std::optional<std::size_t> d,
             const std::string& out_path, bool as_json, std::ostream& out, std::ostream& err) {
  const auto g = load_graph(path);
  ConstructionResult result;
  const HColoredMultigraph* host = &g;
  std::optional<HColoredMultigraph> adapter;
  std::vector<std::string> dropped;
  if (goal_name == "pc-ham") {
    auto pc = pc_hamiltonian(edge_colored_view(g));
    adapter = std::move(pc.adapter);
    host = &*adapter;
    result = std::move(pc.construction);
    dropped = std::move(pc.dropped);
  } else {
    const auto goal = goal_from_token(goal_name);
    if (!goal) throw UsageError("unknown goal '" + goal_name + "'");
    std::size_t bound = 0;
    if (goal_takes_degree(*goal)) {
      if (d) {
        bound = *d;
      } else {
        bound = hypothesis_report(g).min_dynamic_degree.value_or(0);
      }
    }
    result = construct(g, *goal, bound);
  }

  const auto walk_doc = walk_to_json(describe_walk(*host, result.walk));
  const auto cls = verify_walk(*host, result.walk);
  json summary{{"goal", goal_name},
               {"kind", cls.kind()},
               {"promised", to_string(result.kind)},
               {"length", cls.length},
               {"changes", cls.changes},
               {"guaranteed_length", result.guaranteed_length},
               {"max_changes", result.max_changes},
               {"strategy", result.strategy}};
  if (goal_name == "pc-ham") {
    summary["properly_colored"] = properly_colored(*host, result.walk);
    summary["dropped"] = dropped;
  }

  if (!out_path.empty()) write_file(out_path, walk_doc.dump(2) + "\n");
  if (as_json) {
    summary["walk"] = walk_doc;
    out << summary.dump(2) << "\n";
    return kOk;
  }
  std::ostream& text = out_path.empty() ? err : out;
  if (out_path.empty()) out << walk_doc.dump(2) << "\n";
  text << cls.kind() << ", length " << cls.length << ", changes " << cls.changes << "\n";
  text << "walk: " << format_walk(*host, result.walk) << "\n";
  text << "promised: " << to_string(result.kind) << " of length >= " << result.guaranteed_length
       << " with at most " << result.max_changes << " changes (" << result.strategy << ")\n";
  if (goal_name == "pc-ham") {
    text << "properly colored: " << (summary["properly_colored"].get<bool>() ? "yes" : "no") << "\n";
    if (!dropped.empty()) {
      text << "dropped parallel edges of equal color:";
      for (const auto& id : dropped) text << " " << id;
      text << "\n";
    }
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& graph_path, const std::string& walk_path, bool as_json,
               std::ostream& out) {
  const auto g = load_graph(graph_path);
  const auto cls = verify_walk(g, load_walk(walk_path));
  if (as_json) {
    json doc{{"valid", cls.is_dynamic_h_walk},
             {"kind", cls.kind()},
             {"is_h_walk", cls.is_h_walk},
             {"is_trail", cls.is_trail},
             {"is_path", cls.is_path},
             {"is_cycle", cls.is_cycle},
             {"closed", cls.closed},
             {"length", cls.length},
             {"changes", cls.changes},
             {"distinct_vertices", cls.distinct_vertices}};
    if (cls.first_violation) {
      doc["violation"] = {{"step", cls.first_violation->step},
                          {"message", cls.first_violation->message}};
    }
    out << doc.dump(2) << "\n";
  } else {
    out << cls.kind() << ", length " << cls.length << ", changes " << cls.changes << "\n";
    if (cls.first_violation) {
      out << "violation at step " << cls.first_violation->step << ": "
          << cls.first_violation->message << "\n";
    }
  }
  return cls.is_dynamic_h_walk ? kOk : kNegative;
}

// ---- gen ------------------------------------------------------------------

json generate(const std::string& family, const std::vector<std::string>& params, std::size_t d) {
  auto expect = [&](std::size_t count, const std::string& usage) {
    if (params.size() != count) throw UsageError("usage: gen " + family + " " + usage);
  };
  if (family == "glued-k2" || family == "glued-k3") {
    expect(1, "N");
    const std::size_t m = family == "glued-k2" ? 2 : 3;
    return graph_to_json(gen_glued_complete(parse_count(params[0], "N"), m));
  }
  if (family == "complete") {
    expect(3, "N M COLORS");
    return graph_to_json(gen_complete_multigraph(parse_count(params[0], "N"),
                                                 parse_count(params[1], "M"),
                                                 parse_count(params[2], "COLORS")));
  }
  if (family == "random") {
    expect(3, "PROFILE N SEED");
    const auto goal = goal_from_token(params[0]);
    if (!goal) throw UsageError("unknown profile '" + params[0] + "'");
    return graph_to_json(gen_random(parse_count(params[1], "N"),
                                    static_cast<std::uint64_t>(parse_count(params[2], "SEED")),
                                    *goal, d));
  }
  expect(0, "");
  if (family == "pc-k4") return graph_to_json(fixtures::pc_k4());
  if (family == "sample") return graph_to_json(fixtures::sample());
  if (family == "doubled-triangle") return graph_to_json(fixtures::doubled_triangle());
  if (family == "bowtie") return graph_to_json(fixtures::bowtie());
  if (family == "no-adjacent-pair") return graph_to_json(fixtures::dynamic_without_adjacent_pair());
  throw UsageError("unknown family '" + family + "'");
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, std::size_t d,
            const std::string& out_path, std::ostream& out) {
  const auto doc = generate(family, params, d);
  if (out_path.empty()) {
    out << doc.dump(2) << "\n";
  } else {
    write_file(out_path, doc.dump(2) + "\n");
  }
  return kOk;
}

// ---- oracle ---------------------------------------------------------------

OracleBounds bounds_from_env() {
  OracleBounds bounds;
  if (const char* cap = std::getenv("DYNWALK_ORACLE_MAX_N")) {
    bounds.max_vertices = parse_count(cap, "DYNWALK_ORACLE_MAX_N");
  }
  return bounds;
}

int cmd_oracle(const std::string& path, const std::string& target, std::string vertex,
               std::size_t min_len, std::size_t max_len, bool as_json, std::ostream& out) {
  static const std::map<std::string, OracleTarget> targets{
      {"h-cycle-through", OracleTarget::HCycleThrough},
      {"no-h-cycle-through", OracleTarget::HCycleThrough},
      {"longest-dyn-cycle", OracleTarget::LongestDynamicCycle},
      {"longest-h-cycle", OracleTarget::LongestHCycle},
      {"ham-h-cycle", OracleTarget::HamiltonianHCycle},
      {"ham-dyn-cycle", OracleTarget::HamiltonianDynamicCycle},
      {"longest-h-path", OracleTarget::LongestHPath},
      {"spanning-trail", OracleTarget::SpanningClosedTrail},
      {"enumerate-dyn-cycles", OracleTarget::EnumerateDynamicCycles},
  };
  const auto it = targets.find(target);
  if (it == targets.end()) throw UsageError("unknown target '" + target + "'");
  const auto g = load_graph(path);

  OracleQuery query;
  query.target = it->second;
  query.min_len = min_len;
  query.max_len = max_len;
  query.bounds = bounds_from_env();
  if (query.target == OracleTarget::HCycleThrough) {
    if (vertex.empty()) throw UsageError(target + " needs a vertex");
    query.through = g.vertex(vertex);
  }
  const auto answer = oracle_solve(g, query);

  const bool negated = target == "no-h-cycle-through";
  const bool is_length = query.target == OracleTarget::LongestDynamicCycle ||
                         query.target == OracleTarget::LongestHCycle ||
                         query.target == OracleTarget::LongestHPath;
  const bool is_enum = query.target == OracleTarget::EnumerateDynamicCycles;
  const bool truth = negated ? !answer.exists : answer.exists;

  if (as_json) {
    json doc{{"target", target}};
    if (is_length) {
      doc["value"] = answer.exists ? json(answer.value) : json(nullptr);
    } else if (is_enum) {
      doc["count"] = answer.walks.size();
      json walks = json::array();
      for (const auto& w : answer.walks) walks.push_back(format_walk(g, w));
      doc["walks"] = walks;
    } else {
      doc["answer"] = truth;
    }
    if (answer.witness) doc["witness"] = walk_to_json(describe_walk(g, *answer.witness));
    out << doc.dump(2) << "\n";
    return kOk;
  }
  if (is_length) {
    if (answer.exists) out << answer.value << "\n"; else out << "none\n";
  } else if (is_enum) {
    out << answer.walks.size() << "\n";
    for (const auto& w : answer.walks) out << format_walk(g, w) << "\n";
  } else {
    out << (truth ? "true" : "false") << "\n";
  }
  if (answer.witness) out << "witness: " << format_walk(g, *answer.witness) << "\n";
  return kOk;
}

int cmd_pc_scan(const std::vector<std::string>& params, bool as_json, std::ostream& out) {
  if (params.size() != 4) throw UsageError("usage: pc-scan N COLORS SAMPLES SEED");
  const auto scan = scan_bundle_bound(parse_count(params[0], "N"), parse_count(params[1], "COLORS"),
                                      parse_count(params[2], "SAMPLES"),
                                      static_cast<std::uint64_t>(parse_count(params[3], "SEED")));
  if (as_json) {
    json doc{{"checked", scan.checked}};
    doc["counterexample"] =
        scan.counterexample ? graph_to_json(*scan.counterexample) : json(nullptr);
    out << doc.dump(2) << "\n";
  } else {
    out << "checked " << scan.checked << " instances, "
        << (scan.counterexample ? "found an instance without a PC hamiltonian cycle"
                                : "every one has a PC hamiltonian cycle")
        << "\n";
    if (scan.counterexample) out << graph_to_json(*scan.counterexample).dump(2) << "\n";
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"H-colored multigraphs and dynamic H-walks", "dynwalk"};
  app.require_subcommand(1);

  std::string graph_path, walk_path, goal, out_path, family, target, vertex, vertex_opt;
  std::vector<std::string> params;
  std::optional<std::size_t> d;
  std::size_t gen_d = 2, min_len = 0, max_len = 0;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Report structure and applicable constructions");
  check->add_option("graph", graph_path, "Graph file")->required();
  check->add_flag("--json", as_json, "Machine-readable output");

  auto* find = app.add_subcommand("find", "Construct a walk for a goal");
  find->add_option("graph", graph_path, "Graph file")->required();
  find->add_option("--goal", goal,
                   "cycle|path-or-cycle|euler|ham-dyn|ham-h|dirac-dyn|dirac-h|complete-dyn|pc-ham")
      ->required();
  find->add_option("--d", d, "Degree bound for cycle and path-or-cycle (default: min dynamic degree)");
  find->add_option("--out", out_path, "Write the walk file here");
  find->add_flag("--json", as_json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Classify a walk");
  verify->add_option("graph", graph_path, "Graph file")->required();
  verify->add_option("walk", walk_path, "Walk file")->required();
  verify->add_flag("--json", as_json, "Machine-readable output");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("family", family,
                  "glued-k2 N | glued-k3 N | complete N M COLORS | random PROFILE N SEED | "
                  "pc-k4 | sample | doubled-triangle | bowtie | no-adjacent-pair")
      ->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("--d", gen_d, "Degree bound for random cycle and path-or-cycle profiles");
  gen->add_option("--out", out_path, "Write the graph file here");

  auto* oracle = app.add_subcommand("oracle", "Exact brute-force answers on small graphs");
  oracle->add_option("graph", graph_path, "Graph file")->required();
  oracle->add_option("--target", target,
                     "h-cycle-through|no-h-cycle-through|longest-dyn-cycle|longest-h-cycle|"
                     "ham-h-cycle|ham-dyn-cycle|longest-h-path|spanning-trail|"
                     "enumerate-dyn-cycles")
      ->required();
  oracle->add_option("through", vertex, "Vertex for the *-through targets");
  oracle->add_option("--vertex", vertex_opt, "Vertex for the *-through targets");
  oracle->add_option("--min-len", min_len, "Minimum cycle length");
  oracle->add_option("--max-len", max_len, "Maximum enumerated length (0: unlimited)");
  oracle->add_flag("--json", as_json, "Machine-readable output");

  auto* pc_scan = app.add_subcommand(
      "pc-scan", "Search instances with a full bundle for one without a PC hamiltonian cycle");
  pc_scan->add_option("params", params, "N COLORS SAMPLES SEED");
  pc_scan->add_flag("--json", as_json, "Machine-readable output");

  auto* dot = app.add_subcommand("dot", "Graphviz export");
  dot->add_option("graph", graph_path, "Graph file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(graph_path, as_json, out);
    if (find->parsed()) return cmd_find(graph_path, goal, d, out_path, as_json, out, err);
    if (verify->parsed()) return cmd_verify(graph_path, walk_path, as_json, out);
    if (gen->parsed()) return cmd_gen(family, params, gen_d, out_path, out);
    if (oracle->parsed()) {
      return cmd_oracle(graph_path, target, vertex_opt.empty() ? vertex : vertex_opt, min_len,
                        max_len, as_json, out);
    }
    if (pc_scan->parsed()) return cmd_pc_scan(params, as_json, out);
    if (dot->parsed()) {
      out << to_dot(load_graph(graph_path));
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
  return kUsage;
}

}  // namespace dynwalk::cli
