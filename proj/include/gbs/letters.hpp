#pragma once

#include <string>

#include "gbs/graph.hpp"
#include "gbs/word.hpp"

namespace gbs {

// Conversions between path words and standard-presentation letters for the
// presentation built from `t` (tree edges map to the identity).
GBSWord letters_to_word(const LabelledGraph& g, const SpanningTree& t, const Presentation& p,
                        const LetterWord& letters);
LetterWord word_to_letters(const LabelledGraph& g, const SpanningTree& t, const Presentation& p,
                           const GBSWord& w);

// Path word of a single generator.
GBSWord vertex_generator_word(const LabelledGraph& g, const SpanningTree& t, VertexId v,
                              const Int& exp = Int(1));
GBSWord stable_letter_word(const LabelledGraph& g, const SpanningTree& t, EdgeId e);

// Parses whitespace-separated a(v)^k, t(e), t(e)^k. Names refer to vertices
// and edges of g; t of a tree edge is the identity.
GBSWord parse_word(const LabelledGraph& g, const SpanningTree& t, const std::string& text);
std::string word_to_string(const LabelledGraph& g, const SpanningTree& t, const GBSWord& w);

}  // namespace gbs
