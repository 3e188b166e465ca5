#include "dynwalk_cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "dynwalk/error.hpp"

namespace dynwalk::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const json& field(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing field '" + key + "'");
  return *it;
}

std::string string_at(const json& value, const std::string& path) {
  if (!value.is_string()) fail(path, "expected a string");
  return value.get<std::string>();
}

/// Colors may be numbers under the complete shorthand.
std::string color_at(const json& value, const std::string& path, bool numeric_ok) {
  if (numeric_ok && value.is_number_unsigned()) return std::to_string(value.get<std::uint64_t>());
  return string_at(value, path);
}

const json& array_at(const json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array");
  return value;
}

std::size_t count_at(const json& value, const std::string& path) {
  if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
  return value.get<std::size_t>();
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
    throw ParseError(source + ":" + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path + ": cannot write file");
  out << text;
}

HColoredMultigraph graph_from_json(const json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  const json& pattern_doc = field(doc, "$", "pattern");
  PatternGraph pattern;
  bool numeric = false;
  if (pattern_doc.is_string()) {
    if (pattern_doc.get<std::string>() != "complete") fail("$.pattern", "unknown shorthand");
    pattern = PatternGraph::complete(count_at(field(doc, "$", "colors"), "$.colors"));
    numeric = true;
  } else if (pattern_doc.is_object() && pattern_doc.contains("complete")) {
    pattern = PatternGraph::complete(count_at(pattern_doc["complete"], "$.pattern.complete"));
    numeric = true;
  } else {
    std::vector<std::string> colors;
    const auto& colors_doc = array_at(field(pattern_doc, "$.pattern", "colors"), "$.pattern.colors");
    for (std::size_t i = 0; i < colors_doc.size(); ++i) {
      colors.push_back(string_at(colors_doc[i], "$.pattern.colors[" + std::to_string(i) + "]"));
    }
    std::vector<std::pair<std::string, std::string>> edges;
    const json empty = json::array();
    const auto& edges_doc = pattern_doc.contains("edges")
                                ? array_at(pattern_doc["edges"], "$.pattern.edges")
                                : empty;
    for (std::size_t i = 0; i < edges_doc.size(); ++i) {
      const std::string path = "$.pattern.edges[" + std::to_string(i) + "]";
      const auto& pair = array_at(edges_doc[i], path);
      if (pair.size() != 2) fail(path, "expected a pair of colors");
      edges.emplace_back(string_at(pair[0], path + "[0]"), string_at(pair[1], path + "[1]"));
    }
    try {
      pattern = PatternGraph(std::move(colors), edges);
    } catch (const Error& e) {
      fail("$.pattern", e.what());
    }
  }

  const json& graph_doc = field(doc, "$", "graph");
  std::vector<std::string> vertices;
  const auto& vdoc = array_at(field(graph_doc, "$.graph", "vertices"), "$.graph.vertices");
  for (std::size_t i = 0; i < vdoc.size(); ++i) {
    vertices.push_back(string_at(vdoc[i], "$.graph.vertices[" + std::to_string(i) + "]"));
  }
  std::vector<EdgeRecord> edges;
  const auto& edoc = array_at(field(graph_doc, "$.graph", "edges"), "$.graph.edges");
  for (std::size_t i = 0; i < edoc.size(); ++i) {
    const std::string path = "$.graph.edges[" + std::to_string(i) + "]";
    const auto& e = edoc[i];
    edges.push_back({string_at(field(e, path, "id"), path + ".id"),
                     string_at(field(e, path, "u"), path + ".u"),
                     string_at(field(e, path, "v"), path + ".v"),
                     color_at(field(e, path, "color"), path + ".color", numeric)});
  }
  return HColoredMultigraph::build(std::move(vertices), std::move(edges), std::move(pattern));
}

json graph_to_json(const HColoredMultigraph& graph) {
  json doc;
  const auto& pattern = graph.pattern();
  json pedges = json::array();
  for (const auto& [a, b] : pattern.edges()) pedges.push_back({pattern.name(a), pattern.name(b)});
  doc["pattern"] = {{"colors", pattern.colors()}, {"edges", pedges}};
  json edges = json::array();
  for (const auto& r : graph.records()) {
    edges.push_back({{"id", r.id}, {"u", r.u}, {"v", r.v}, {"color", r.color}});
  }
  doc["graph"] = {{"vertices", graph.vertex_ids()}, {"edges", edges}};
  return doc;
}

json graph_to_json(const EdgeColoredMultigraph& graph) {
  json doc;
  doc["pattern"] = {{"complete", graph.colors}};
  json edges = json::array();
  for (const auto& e : graph.edges) {
    edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"color", e.color}});
  }
  doc["graph"] = {{"vertices", graph.vertices}, {"edges", edges}};
  return doc;
}

EdgeColoredMultigraph edge_colored_view(const HColoredMultigraph& graph) {
  const auto& pattern = graph.pattern();
  const std::size_t c = pattern.size();
  if (!pattern.is_complete_loopless() || pattern != PatternGraph::complete(c)) {
    throw Error(ErrorKind::PreconditionFailed,
                "the pattern must be complete and loopless on colors 1..c");
  }
  EdgeColoredMultigraph out;
  out.colors = c;
  out.vertices = graph.vertex_ids();
  for (const auto& r : graph.records()) {
    out.edges.push_back({r.id, r.u, r.v, static_cast<std::size_t>(std::stoul(r.color))});
  }
  return out;
}

WalkDescription walk_from_json(const json& doc) {
  if (!doc.is_object()) fail("$", "expected an object");
  WalkDescription walk;
  if (doc.contains("closed")) {
    if (!doc["closed"].is_boolean()) fail("$.closed", "expected a boolean");
    walk.closed = doc["closed"].get<bool>();
  }
  const auto& steps = array_at(field(doc, "$", "steps"), "$.steps");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string path = "$.steps[" + std::to_string(i) + "]";
    WalkDescription::Step step;
    step.from = string_at(field(steps[i], path, "from"), path + ".from");
    const auto& edges = array_at(field(steps[i], path, "edges"), path + ".edges");
    for (std::size_t j = 0; j < edges.size(); ++j) {
      step.edges.push_back(string_at(edges[j], path + ".edges[" + std::to_string(j) + "]"));
    }
    walk.steps.push_back(std::move(step));
  }
  if (doc.contains("end") && !doc["end"].is_null()) walk.end = string_at(doc["end"], "$.end");
  return walk;
}

json walk_to_json(const WalkDescription& walk) {
  json steps = json::array();
  for (const auto& s : walk.steps) steps.push_back({{"from", s.from}, {"edges", s.edges}});
  json doc{{"closed", walk.closed}, {"steps", steps}};
  if (walk.end) doc["end"] = *walk.end;
  return doc;
}

HColoredMultigraph load_graph(const std::string& path) {
  return graph_from_json(parse_json(read_file(path), path));
}

WalkDescription load_walk(const std::string& path) {
  return walk_from_json(parse_json(read_file(path), path));
}

std::string to_dot(const HColoredMultigraph& graph) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& v : graph.vertex_ids()) os << "  \"" << v << "\";\n";
  for (const auto& r : graph.records()) {
    os << "  \"" << r.u << "\" -- \"" << r.v << "\" [label=\"" << r.id << ":" << r.color
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace dynwalk::cli
