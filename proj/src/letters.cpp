#include "gbs/letters.hpp"

#include <cctype>
#include <sstream>

#include "gbs/errors.hpp"

namespace gbs {

GBSWord vertex_generator_word(const LabelledGraph& g, const SpanningTree& t, VertexId v,
                              const Int& exp) {
  (void)g;
  return conjugate_by_path(t.path_from_base(v), GBSWord::vertex_power(v, exp), t.base);
}

GBSWord stable_letter_word(const LabelledGraph& g, const SpanningTree& t, EdgeId e) {
  // t_e runs from the vertex of the odd half-edge across to the even one.
  HalfEdge h = 2 * e + 1;
  VertexId w = g.origin(h);
  VertexId v = g.terminus(h);
  GBSWord out = GBSWord::identity(t.base);
  for (HalfEdge x : t.path_from_base(w)) {
    out.edges.push_back(x);
    out.powers.push_back(Int(0));
  }
  out.edges.push_back(h);
  out.powers.push_back(Int(0));
  for (HalfEdge x : t.path_to_base(v)) {
    out.edges.push_back(x);
    out.powers.push_back(Int(0));
  }
  return out;
}

GBSWord letters_to_word(const LabelledGraph& g, const SpanningTree& t, const Presentation& p,
                        const LetterWord& letters) {
  GBSWord out = GBSWord::identity(t.base);
  for (const auto& l : letters) {
    const Generator& gen = p.generators.at(l.gen);
    if (gen.kind == Generator::Vertex) {
      out = concat(out, vertex_generator_word(g, t, gen.id, l.exp));
    } else {
      GBSWord s = stable_letter_word(g, t, gen.id);
      out = concat(out, power(g, s, l.exp));
    }
  }
  return out;
}

LetterWord word_to_letters(const LabelledGraph& g, const SpanningTree& t, const Presentation& p,
                           const GBSWord& w) {
  check_word(g, w);
  LetterWord out;
  auto push = [&out](int gen, const Int& exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().gen == gen) {
      out.back().exp += exp;
      if (out.back().exp == 0) out.pop_back();
      return;
    }
    out.push_back(Letter{gen, exp});
  };
  VertexId at = w.base;
  push(p.vertex_gen[at], w.powers[0]);
  for (size_t i = 0; i < w.edges.size(); ++i) {
    HalfEdge h = w.edges[i];
    EdgeId e = edge_of(h);
    if (!t.in_tree[e]) push(p.stable_gen[e], Int(h % 2 == 1 ? 1 : -1));
    at = g.terminus(h);
    push(p.vertex_gen[at], w.powers[i + 1]);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_space() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 1, static_cast<int>(pos) + 1);
  }
};

}  // namespace

GBSWord parse_word(const LabelledGraph& g, const SpanningTree& t, const std::string& text) {
  Cursor c{text};
  GBSWord out = GBSWord::identity(t.base);
  c.skip_space();
  while (c.pos < text.size()) {
    char kind = text[c.pos];
    if (kind == '1' && (c.pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[c.pos + 1])))) {
      ++c.pos;
      c.skip_space();
      continue;
    }
    if ((kind != 'a' && kind != 't') || c.pos + 1 >= text.size() || text[c.pos + 1] != '(') {
      c.fail("expected a(vertex) or t(edge)");
    }
    size_t close = text.find(')', c.pos + 2);
    if (close == std::string::npos) c.fail("missing ')'");
    std::string name = text.substr(c.pos + 2, close - c.pos - 2);
    size_t name_pos = c.pos + 2;
    c.pos = close + 1;
    Int exp = 1;
    if (c.pos < text.size() && text[c.pos] == '^') {
      size_t start = ++c.pos;
      if (c.pos < text.size() && (text[c.pos] == '-' || text[c.pos] == '+')) ++c.pos;
      while (c.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[c.pos]))) ++c.pos;
      try {
        exp = parse_int(text.substr(start, c.pos - start));
      } catch (const InputError&) {
        c.pos = start;
        c.fail("bad exponent");
      }
    }
    if (kind == 'a') {
      VertexId v = g.find_vertex(name);
      if (v < 0) {
        c.pos = name_pos;
        c.fail("unknown vertex '" + name + "'");
      }
      out = concat(out, vertex_generator_word(g, t, v, exp));
    } else {
      EdgeId e = g.find_edge(name);
      if (e < 0) {
        c.pos = name_pos;
        c.fail("unknown edge '" + name + "'");
      }
      out = concat(out, power(g, stable_letter_word(g, t, e), exp));
    }
    if (c.pos < text.size() && !std::isspace(static_cast<unsigned char>(text[c.pos]))) {
      c.fail("expected whitespace between letters");
    }
    c.skip_space();
  }
  return out;
}

std::string word_to_string(const LabelledGraph& g, const SpanningTree& t, const GBSWord& w) {
  Presentation p = standard_presentation(g, t);
  LetterWord letters = word_to_letters(g, t, p, w);
  if (letters.empty()) return "1";
  return letters_to_string(g, p, letters);
}

}  // namespace gbs
