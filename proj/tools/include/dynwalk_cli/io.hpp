#pragma once

// JSON graph and walk files.
//
// Graph file:
//   {
//     "pattern": {"colors": ["B", "R"], "edges": [["B", "R"]]},
//     "graph": {"vertices": ["v1", "v2"],
//               "edges": [{"id": "e1", "u": "v1", "v": "v2", "color": "B"}]}
//   }
// The pattern may also be {"complete": c} or the string "complete" with a
// top-level "colors": c; colors are then "1".."c" and edge colors may be
// written as numbers.
//
// Walk file:
//   {"closed": true, "steps": [{"from": "v4", "edges": ["e9"]}, ...],
//    "end": "v7"}
// "end" is optional; closed walks return to the first "from".

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dynwalk/model.hpp"
#include "dynwalk/pc.hpp"

namespace dynwalk::cli {

/// Malformed JSON or a field of the wrong shape; the message names the
/// line or the JSON path.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json parse_json(const std::string& text, const std::string& source);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

HColoredMultigraph graph_from_json(const nlohmann::json& doc);
nlohmann::json graph_to_json(const HColoredMultigraph& graph);
/// Complete-pattern graphs written with the shorthand.
nlohmann::json graph_to_json(const EdgeColoredMultigraph& graph);

/// The edge-colored view of a graph whose pattern is complete and loopless
/// on colors "1".."c"; throws PreconditionFailed otherwise.
EdgeColoredMultigraph edge_colored_view(const HColoredMultigraph& graph);

WalkDescription walk_from_json(const nlohmann::json& doc);
nlohmann::json walk_to_json(const WalkDescription& walk);

HColoredMultigraph load_graph(const std::string& path);
WalkDescription load_walk(const std::string& path);

/// Graphviz text for display; parallel edges are drawn separately.
std::string to_dot(const HColoredMultigraph& graph);

}  // namespace dynwalk::cli
