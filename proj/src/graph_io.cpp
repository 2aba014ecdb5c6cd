#include "gbs/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gbs/errors.hpp"
#include "gbs/shape.hpp"

namespace gbs {

Json int_to_json(const Int& a) {
  if (a.fits_slong_p()) return Json(a.get_si());
  return Json(a.get_str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  throw InputError("expected an integer in JSON, got " + j.dump());
}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

Int token_int(const Token& t, int line) {
  try {
    Int v = parse_int(t.text);
    if (v == 0) throw ParseError("labels must be nonzero", line, t.column);
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const InputError&) {
    throw ParseError("expected a nonzero integer, got '" + t.text + "'", line, t.column);
  }
}

LabelledGraph parse_shorthand(const std::vector<Token>& toks, int line) {
  const std::string& kind = toks[0].text;
  if (kind == "segment" || kind == "circle") {
    if (toks.size() < 3 || (toks.size() - 1) % 2 != 0) {
      throw ParseError(kind + " needs an even, nonzero number of labels", line, toks[0].column);
    }
    std::vector<Int> a, b;
    for (std::size_t i = 1; i < toks.size(); i += 2) {
      a.push_back(token_int(toks[i], line));
      b.push_back(token_int(toks[i + 1], line));
    }
    return kind == "segment" ? segment_graph(a, b) : circle_graph(a, b);
  }
  // lollipop k q0 r1 ... | x0 y1 ...
  if (toks.size() < 2) throw ParseError("lollipop needs a segment length", line, toks[0].column);
  Int k = token_int(toks[1], line);
  if (k < 1) throw ParseError("lollipop segment length must be positive", line, toks[1].column);
  std::size_t bar = 0;
  for (std::size_t i = 2; i < toks.size(); ++i) {
    if (toks[i].text == "|") bar = i;
  }
  if (bar == 0) throw ParseError("lollipop needs '|' before the circle labels", line, toks[0].column);
  std::size_t seg_count = bar - 2;
  if (Int(static_cast<long>(seg_count)) != 2 * k) {
    throw ParseError("lollipop segment needs exactly 2k labels", line, toks[1].column);
  }
  std::size_t circ_count = toks.size() - bar - 1;
  if (circ_count == 0 || circ_count % 2 != 0) {
    throw ParseError("lollipop circle needs an even, nonzero number of labels", line,
                     toks[bar].column);
  }
  std::vector<Int> q, r, x, y;
  for (std::size_t i = 2; i < bar; i += 2) {
    q.push_back(token_int(toks[i], line));
    r.push_back(token_int(toks[i + 1], line));
  }
  for (std::size_t i = bar + 1; i < toks.size(); i += 2) {
    x.push_back(token_int(toks[i], line));
    y.push_back(token_int(toks[i + 1], line));
  }
  return lollipop_graph(q, r, x, y);
}

}  // namespace

LabelledGraph parse_graph_text(const std::string& text) {
  LabelledGraph g;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool shorthand = false;
  bool explicit_form = false;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;
    if (head == "segment" || head == "circle" || head == "lollipop") {
      if (shorthand || explicit_form) {
        throw ParseError("a shorthand line must be the only construct", line, toks[0].column);
      }
      g = parse_shorthand(toks, line);
      shorthand = true;
      continue;
    }
    if (shorthand) throw ParseError("a shorthand line must be the only construct", line, toks[0].column);
    explicit_form = true;
    if (head == "vertex") {
      if (toks.size() != 2) throw ParseError("expected: vertex <name>", line, toks[0].column);
      if (g.find_vertex(toks[1].text) >= 0) {
        throw ParseError("duplicate vertex '" + toks[1].text + "'", line, toks[1].column);
      }
      g.add_vertex(toks[1].text);
    } else if (head == "edge") {
      if (toks.size() != 6) {
        throw ParseError("expected: edge <name> <v> <w> <label_v> <label_w>", line, toks[0].column);
      }
      if (g.find_edge(toks[1].text) >= 0) {
        throw ParseError("duplicate edge '" + toks[1].text + "'", line, toks[1].column);
      }
      VertexId v = g.find_vertex(toks[2].text);
      if (v < 0) throw ParseError("unknown vertex '" + toks[2].text + "'", line, toks[2].column);
      VertexId w = g.find_vertex(toks[3].text);
      if (w < 0) throw ParseError("unknown vertex '" + toks[3].text + "'", line, toks[3].column);
      g.add_edge(toks[1].text, v, w, token_int(toks[4], line), token_int(toks[5], line));
    } else {
      throw ParseError("unknown construct '" + head + "'", line, toks[0].column);
    }
  }
  g.validate();
  return g;
}

std::string graph_to_text(const LabelledGraph& g) {
  std::ostringstream out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) out << "vertex " << g.vertex_name(v) << "\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out << "edge " << g.edge_name(e) << " " << g.vertex_name(g.origin(2 * e)) << " "
        << g.vertex_name(g.origin(2 * e + 1)) << " " << to_string(g.label(2 * e)) << " "
        << to_string(g.label(2 * e + 1)) << "\n";
  }
  return out.str();
}

Json graph_to_json(const LabelledGraph& g) {
  Json vertices = Json::array();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    vertices.push_back({{"id", v}, {"name", g.vertex_name(v)}});
  }
  Json edges = Json::array();
  Json oriented = Json::array();
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    edges.push_back({{"id", e}, {"name", g.edge_name(e)}, {"half_edges", {2 * e, 2 * e + 1}}});
  }
  for (HalfEdge h = 0; h < g.num_half_edges(); ++h) {
    oriented.push_back({{"id", h},
                        {"origin", g.origin(h)},
                        {"reverse", reverse(h)},
                        {"label", int_to_json(g.label(h))}});
  }
  return {{"vertices", vertices}, {"edges", edges}, {"oriented_edges", oriented}};
}

LabelledGraph graph_from_json(const Json& j) {
  try {
    LabelledGraph g;
    for (const auto& v : j.at("vertices")) {
      if (v.at("id").get<int>() != g.num_vertices()) throw InputError("vertex ids must be 0..V-1 in order");
      g.add_vertex(v.at("name").get<std::string>());
    }
    const auto& oriented = j.at("oriented_edges");
    const auto& edges = j.at("edges");
    if (oriented.size() != 2 * edges.size()) throw InputError("oriented_edges must pair up edges");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto& a = oriented.at(2 * e);
      const auto& b = oriented.at(2 * e + 1);
      if (a.at("id").get<int>() != static_cast<int>(2 * e) ||
          b.at("id").get<int>() != static_cast<int>(2 * e + 1) ||
          a.at("reverse").get<int>() != static_cast<int>(2 * e + 1) ||
          b.at("reverse").get<int>() != static_cast<int>(2 * e)) {
        throw InputError("oriented edge pairing is inconsistent at edge " + std::to_string(e));
      }
      g.add_edge(edges.at(e).at("name").get<std::string>(), a.at("origin").get<int>(),
                 b.at("origin").get<int>(), int_from_json(a.at("label")),
                 int_from_json(b.at("label")));
    }
    g.validate();
    return g;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed graph JSON: ") + ex.what());
  }
}

Json move_to_json(const MoveRecord& r) {
  Json params = Json::array();
  for (const auto& p : r.params) params.push_back(int_to_json(p));
  return {{"kind", move_kind_name(r.kind)},
          {"location", r.location},
          {"params", params},
          {"half_edges", r.half_edges}};
}

MoveRecord move_from_json(const Json& j) {
  try {
    MoveRecord r;
    std::string kind = j.at("kind").get<std::string>();
    bool found = false;
    for (MoveKind k : {MoveKind::SignChangeVertex, MoveKind::SignChangeEdge, MoveKind::Collapse,
                       MoveKind::Expansion, MoveKind::Contraction, MoveKind::Displacement}) {
      if (move_kind_name(k) == kind) {
        r.kind = k;
        found = true;
      }
    }
    if (!found) throw InputError("unknown move kind '" + kind + "'");
    r.location = j.at("location").get<int>();
    for (const auto& p : j.value("params", Json::array())) r.params.push_back(int_from_json(p));
    r.half_edges = j.value("half_edges", std::vector<HalfEdge>{});
    return r;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed move JSON: ") + ex.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LabelledGraph load_graph(const std::string& path) {
  std::string text = read_file(path);
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& ex) {
      throw InputError(std::string("invalid JSON: ") + ex.what());
    }
    return graph_from_json(j);
  }
  return parse_graph_text(text);
}

}  // namespace gbs
