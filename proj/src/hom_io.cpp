#include "gbs/hom_io.hpp"

#include <sstream>

#include "gbs/errors.hpp"
#include "gbs/graph_io.hpp"
#include "gbs/letters.hpp"

namespace gbs {

HomCertificate hom_from_strings(const LabelledGraph& source, VertexId source_base, const LabelledGraph& target,
                                VertexId target_base, const std::vector<std::string>& images,
                                const std::string& provenance) {
  SpanningTree tt = spanning_tree(target, target_base);
  std::vector<GBSWord> words;
  for (const auto& s : images) words.push_back(parse_word(target, tt, s));
  return make_hom(source, source_base, target, target_base, words, provenance);
}

namespace {

Json node_to_json(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Gen: return Json{{"gen", n.gen}};
    case ExprNode::Product: return Json{{"product", n.children}};
    case ExprNode::Power: return Json{{"power", n.child}, {"exp", int_to_json(n.exp)}};
  }
  return Json();
}

ExprNode node_from_json(const Json& j, int index, int source_gens) {
  ExprNode n;
  auto check_child = [index](int c) {
    if (c < 0 || c >= index) throw InputError("witness node " + std::to_string(index) + " refers forward");
  };
  if (j.contains("gen")) {
    n.kind = ExprNode::Gen;
    n.gen = j.at("gen").get<int>();
    if (n.gen < 0 || n.gen >= source_gens) throw InputError("witness generator out of range");
  } else if (j.contains("product")) {
    n.kind = ExprNode::Product;
    n.children = j.at("product").get<std::vector<int>>();
    for (int c : n.children) check_child(c);
  } else if (j.contains("power")) {
    n.kind = ExprNode::Power;
    n.child = j.at("power").get<int>();
    check_child(n.child);
    n.exp = int_from_json(j.at("exp"));
  } else {
    throw InputError("unknown witness node");
  }
  return n;
}

}  // namespace

Json certificate_to_json(const HomCertificate& c) {
  Presentation sp = c.source_presentation();
  Presentation tp = c.target_presentation();
  SpanningTree tt = c.target_tree();
  Json images = Json::array();
  for (size_t i = 0; i < c.images.size(); ++i) {
    images.push_back({{"generator", sp.generator_name(c.source, static_cast<int>(i))},
                      {"image", word_to_string(c.target, tt, c.images[i])}});
  }
  Json nodes = Json::array();
  for (const auto& n : c.witness_nodes.nodes()) nodes.push_back(node_to_json(n));
  Json witnesses = Json::array();
  for (size_t i = 0; i < c.witnesses.size(); ++i) {
    Json w = {{"generator", tp.generator_name(c.target, static_cast<int>(i))}};
    w["node"] = c.witnesses[i] >= 0 ? Json(c.witnesses[i]) : Json(nullptr);
    witnesses.push_back(w);
  }
  Json out = {{"type", "hom"},
              {"source", graph_to_json(c.source)},
              {"source_base", c.source.vertex_name(c.source_base)},
              {"target", graph_to_json(c.target)},
              {"target_base", c.target.vertex_name(c.target_base)},
              {"images", images},
              {"witness_nodes", nodes},
              {"witnesses", witnesses},
              {"provenance", c.provenance}};
  if (!c.notes.empty()) out["notes"] = c.notes;
  return out;
}

HomCertificate certificate_from_json(const Json& j) {
  try {
    LabelledGraph source = graph_from_json(j.at("source"));
    LabelledGraph target = graph_from_json(j.at("target"));
    VertexId sb = source.find_vertex(j.at("source_base").get<std::string>());
    VertexId tb = target.find_vertex(j.at("target_base").get<std::string>());
    if (sb < 0 || tb < 0) throw InputError("unknown base vertex");
    std::vector<std::string> images;
    for (const auto& e : j.at("images")) images.push_back(e.at("image").get<std::string>());
    HomCertificate c = hom_from_strings(source, sb, target, tb, images, j.value("provenance", ""));
    int gens = static_cast<int>(c.images.size());
    const Json& nodes = j.value("witness_nodes", Json::array());
    for (size_t i = 0; i < nodes.size(); ++i) {
      c.witness_nodes.mutable_nodes().push_back(node_from_json(nodes[i], static_cast<int>(i), gens));
    }
    const Json& wit = j.value("witnesses", Json::array());
    if (!wit.empty()) {
      size_t target_gens = c.target_presentation().generators.size();
      if (wit.size() != target_gens) throw InputError("witness table has the wrong length");
      for (const auto& w : wit) {
        int node = w.at("node").is_null() ? -1 : w.at("node").get<int>();
        if (node >= static_cast<int>(nodes.size())) throw InputError("witness node out of range");
        c.witnesses.push_back(node);
      }
    }
    if (j.contains("notes")) c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

std::string certificate_to_text(const HomCertificate& c) {
  Presentation sp = c.source_presentation();
  Presentation tp = c.target_presentation();
  SpanningTree tt = c.target_tree();
  std::ostringstream out;
  out << c.provenance << "\n";
  for (size_t i = 0; i < c.images.size(); ++i) {
    out << "  " << sp.generator_name(c.source, static_cast<int>(i)) << " -> "
        << word_to_string(c.target, tt, c.images[i]) << "\n";
  }
  if (c.has_witnesses()) {
    out << "  surjectivity witnesses for";
    for (size_t i = 0; i < c.witnesses.size(); ++i) {
      if (c.witnesses[i] >= 0) out << " " << tp.generator_name(c.target, static_cast<int>(i));
    }
    out << "\n";
  }
  for (const auto& n : c.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace gbs
