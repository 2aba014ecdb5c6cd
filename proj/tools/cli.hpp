#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gbs/decision.hpp"
#include "gbs/graph.hpp"
#include "gbs/json_util.hpp"

namespace gbs::cli {

// Exit codes: 0 when a decision was computed, 1 on input errors, 2 when a
// cap was exceeded, 3 on internal errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// A graph argument is a file path, "bs M N", or inline graph text with ';'
// separating lines.
LabelledGraph graph_argument(const std::string& arg);

Json decision_to_json(const Decision& d);
std::string decision_to_text(const Decision& d);

}  // namespace gbs::cli
