#pragma once

#include <string>

#include "gbs/graph.hpp"
#include "gbs/json_util.hpp"
#include "gbs/moves.hpp"

namespace gbs {

// Text format, one construct per line, '#' starts a comment:
//   vertex <name>
//   edge <name> <v> <w> <label_near_v> <label_near_w>
// or a single shorthand line:
//   segment q0 r1 q1 r2 ...
//   circle x0 y1 x1 y2 ...
//   lollipop k q0 r1 ... | x0 y1 ...
// Throws ParseError with line and column.
LabelledGraph parse_graph_text(const std::string& text);
std::string graph_to_text(const LabelledGraph& g);

Json graph_to_json(const LabelledGraph& g);
LabelledGraph graph_from_json(const Json& j);

Json move_to_json(const MoveRecord& r);
MoveRecord move_from_json(const Json& j);

// Reads a graph from a file in either format (JSON if it starts with '{').
LabelledGraph load_graph(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace gbs
