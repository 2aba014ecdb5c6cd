#include "gbs/hom.hpp"

#include <functional>
#include <map>
#include <optional>

#include "gbs/errors.hpp"
#include "gbs/letters.hpp"

namespace gbs {

int ExprTable::gen(int g) {
  for (size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].kind == ExprNode::Gen && nodes_[i].gen == g) return static_cast<int>(i);
  }
  ExprNode n;
  n.kind = ExprNode::Gen;
  n.gen = g;
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

int ExprTable::product(const std::vector<int>& parts) {
  if (parts.size() == 1) return parts[0];
  ExprNode n;
  n.kind = ExprNode::Product;
  n.children = parts;
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

int ExprTable::power(int node, const Int& e) {
  if (e == 1) return node;
  ExprNode n;
  n.kind = ExprNode::Power;
  n.child = node;
  n.exp = e;
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

int ExprTable::import(const ExprTable& other, int node, const std::vector<int>& subst) {
  std::map<int, int> memo;
  std::function<int(int)> go = [&](int i) -> int {
    auto it = memo.find(i);
    if (it != memo.end()) return it->second;
    const ExprNode& n = other.nodes_.at(i);
    int out;
    switch (n.kind) {
      case ExprNode::Gen:
        out = subst.at(n.gen);
        if (out < 0) throw InputError("missing witnesses");
        break;
      case ExprNode::Product: {
        std::vector<int> parts;
        for (int c : n.children) parts.push_back(go(c));
        out = product(parts);
        break;
      }
      default:
        out = power(go(n.child), n.exp);
    }
    memo[i] = out;
    return out;
  };
  return go(node);
}

bool HomCertificate::has_witnesses() const {
  if (witnesses.empty()) return false;
  for (int w : witnesses) {
    if (w < 0) return false;
  }
  return true;
}

HomCertificate make_hom(const LabelledGraph& source, VertexId source_base, const LabelledGraph& target,
                        VertexId target_base, std::vector<GBSWord> images, const std::string& provenance) {
  HomCertificate c;
  c.source = source;
  c.target = target;
  c.source_base = source_base;
  c.target_base = target_base;
  c.images = std::move(images);
  c.provenance = provenance;
  return c;
}

HomCertificate identity_certificate(const LabelledGraph& g, VertexId base) {
  SpanningTree t = spanning_tree(g, base);
  Presentation p = standard_presentation(g, t);
  std::vector<GBSWord> images;
  for (const auto& gen : p.generators) {
    images.push_back(gen.kind == Generator::Vertex ? vertex_generator_word(g, t, gen.id)
                                                   : stable_letter_word(g, t, gen.id));
  }
  HomCertificate c = make_hom(g, base, g, base, images, "identity");
  for (size_t i = 0; i < p.generators.size(); ++i) c.witnesses.push_back(c.witness_nodes.gen(static_cast<int>(i)));
  return c;
}

namespace {

void check_images(const HomCertificate& c, const Presentation& sp) {
  if (c.images.size() != sp.generators.size()) {
    throw InputError("certificate lists " + std::to_string(c.images.size()) + " images for " +
                     std::to_string(sp.generators.size()) + " generators");
  }
  for (const auto& w : c.images) {
    check_word(c.target, w);
    if (w.base != c.target_base) throw InputError("malformed word: image not based at the target base");
  }
}

}  // namespace

GBSWord image_of_letters(const HomCertificate& c, const LetterWord& letters) {
  GBSWord out = GBSWord::identity(c.target_base);
  for (const auto& l : letters) {
    out = concat(out, power(c.target, c.images.at(l.gen), l.exp));
  }
  return britton_reduce(c.target, out).word;
}

GBSWord image_of_word(const HomCertificate& c, const GBSWord& w) {
  SpanningTree t = c.source_tree();
  Presentation p = standard_presentation(c.source, t);
  return image_of_letters(c, word_to_letters(c.source, t, p, w));
}

std::vector<std::string> hom_failures(const HomCertificate& c) {
  SpanningTree st = c.source_tree();
  Presentation sp = standard_presentation(c.source, st);
  check_images(c, sp);
  SpanningTree tt = c.target_tree();
  std::vector<std::string> out;
  for (EdgeId e = 0; e < c.source.num_edges(); ++e) {
    GBSWord img = image_of_letters(c, sp.relators[e]);
    if (!britton_reduce(c.target, img).trivial) {
      out.push_back("relator of edge " + c.source.edge_name(e) + " maps to " +
                    word_to_string(c.target, tt, img));
    }
  }
  return out;
}

bool check_hom(const HomCertificate& c) { return hom_failures(c).empty(); }

GBSWord evaluate_expr(const HomCertificate& c, int node) {
  const auto& nodes = c.witness_nodes.nodes();
  std::vector<std::optional<GBSWord>> memo(nodes.size());
  std::function<GBSWord(int)> go = [&](int i) -> GBSWord {
    if (memo.at(i)) return *memo[i];
    const ExprNode& n = nodes[i];
    GBSWord out;
    switch (n.kind) {
      case ExprNode::Gen:
        out = britton_reduce(c.target, c.images.at(n.gen)).word;
        break;
      case ExprNode::Product: {
        out = GBSWord::identity(c.target_base);
        for (int ch : n.children) out = britton_reduce(c.target, concat(out, go(ch))).word;
        break;
      }
      default:
        out = power(c.target, go(n.child), n.exp);
    }
    memo[i] = out;
    return out;
  };
  return go(node);
}

std::vector<std::string> epi_failures(const HomCertificate& c) {
  SpanningTree tt = c.target_tree();
  Presentation tp = standard_presentation(c.target, tt);
  if (c.witnesses.size() != tp.generators.size()) throw InputError("missing witnesses");
  std::vector<std::string> out;
  for (size_t j = 0; j < tp.generators.size(); ++j) {
    if (c.witnesses[j] < 0) throw InputError("missing witness for " + tp.generator_name(c.target, static_cast<int>(j)));
    const Generator& g = tp.generators[j];
    GBSWord want = g.kind == Generator::Vertex ? vertex_generator_word(c.target, tt, g.id)
                                               : stable_letter_word(c.target, tt, g.id);
    if (!equal(c.target, evaluate_expr(c, c.witnesses[j]), want)) {
      out.push_back("witness for " + tp.generator_name(c.target, static_cast<int>(j)) + " does not verify");
    }
  }
  return out;
}

bool check_epi(const HomCertificate& c) { return check_hom(c) && epi_failures(c).empty(); }

HomCertificate rebase_target(const HomCertificate& c, VertexId base) {
  HomCertificate out = c;
  out.target_base = base;
  out.witness_nodes = ExprTable();
  out.witnesses.clear();
  std::vector<HalfEdge> path = spanning_tree(c.target, base).path_from_base(c.target_base);
  for (auto& w : out.images) w = britton_reduce(c.target, conjugate_by_path(path, w, base)).word;
  return out;
}

HomCertificate compose(const HomCertificate& first, const HomCertificate& second) {
  if (!(first.target == second.source) || first.target_base != second.source_base) {
    throw InputError("certificates do not compose: target and source differ");
  }
  HomCertificate out;
  out.source = first.source;
  out.source_base = first.source_base;
  out.target = second.target;
  out.target_base = second.target_base;
  for (const auto& w : first.images) out.images.push_back(image_of_word(second, w));
  out.provenance = first.provenance + "; " + second.provenance;
  out.notes = first.notes;
  out.notes.insert(out.notes.end(), second.notes.begin(), second.notes.end());
  if (first.has_witnesses() && second.has_witnesses()) {
    out.witness_nodes = first.witness_nodes;
    for (int w : second.witnesses) {
      out.witnesses.push_back(out.witness_nodes.import(second.witness_nodes, w, first.witnesses));
    }
  }
  return out;
}

bool fixes_generators(const HomCertificate& c) {
  if (!(c.source == c.target) || c.source_base != c.target_base) return false;
  SpanningTree t = c.source_tree();
  Presentation p = standard_presentation(c.source, t);
  for (size_t i = 0; i < p.generators.size(); ++i) {
    const Generator& g = p.generators[i];
    GBSWord want = g.kind == Generator::Vertex ? vertex_generator_word(c.source, t, g.id)
                                               : stable_letter_word(c.source, t, g.id);
    if (!equal(c.target, c.images.at(i), want)) return false;
  }
  return true;
}

namespace {

GBSWord map_path(const LabelledGraph& source, const LabelledGraph& target, const PathMap& pm,
                 const GBSWord& w) {
  GBSWord out = GBSWord::identity(pm.vmap.at(w.base));
  auto add_power = [&](VertexId v, const Int& p) {
    if (p != 0) out = concat(out, power(target, pm.vertex_image.at(v), p));
  };
  add_power(w.base, w.powers[0]);
  for (size_t i = 0; i < w.edges.size(); ++i) {
    HalfEdge h = w.edges[i];
    const GBSWord& e = pm.edge_image.at(edge_of(h));
    out = concat(out, h % 2 == 0 ? e : inverse(e));
    add_power(source.terminus(h), w.powers[i + 1]);
  }
  return out;
}

}  // namespace

HomCertificate certificate_from_path_map(const LabelledGraph& source, const LabelledGraph& target,
                                         const PathMap& pm, const std::string& provenance) {
  SpanningTree st = spanning_tree(source, 0);
  SpanningTree tt = spanning_tree(target, 0);
  Presentation sp = standard_presentation(source, st);
  std::vector<HalfEdge> to_image_base = tt.path_from_base(pm.vmap.at(0));
  std::vector<GBSWord> images;
  for (const auto& g : sp.generators) {
    GBSWord w = g.kind == Generator::Vertex ? vertex_generator_word(source, st, g.id)
                                            : stable_letter_word(source, st, g.id);
    GBSWord img = conjugate_by_path(to_image_base, map_path(source, target, pm, w), 0);
    images.push_back(britton_reduce(target, img).word);
  }
  return make_hom(source, 0, target, 0, images, provenance);
}

namespace {

PathMap identity_path_map(const LabelledGraph& g) {
  PathMap pm;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    pm.vmap.push_back(v);
    pm.vertex_image.push_back(GBSWord::vertex_power(v, Int(1)));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    pm.edge_image.push_back(GBSWord{g.origin(2 * e), {2 * e}, {Int(0), Int(0)}});
  }
  return pm;
}

// Map from g to the graph obtained by merging `removed` into `survivor`
// along e; a_removed maps to a_survivor^removed_exp and a_survivor to
// a_survivor^survivor_exp.
PathMap merge_path_map(const LabelledGraph& g, EdgeId e, VertexId survivor, VertexId removed,
                       const Int& survivor_exp, const Int& removed_exp) {
  PathMap pm;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    VertexId img = renumber_vertex(v == removed ? survivor : v, removed);
    pm.vmap.push_back(img);
    Int exp = v == removed ? removed_exp : v == survivor ? survivor_exp : Int(1);
    pm.vertex_image.push_back(GBSWord::vertex_power(img, exp));
  }
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    VertexId from = pm.vmap[g.origin(2 * f)];
    if (f == e) {
      pm.edge_image.push_back(GBSWord::identity(from));
    } else {
      pm.edge_image.push_back(GBSWord{from, {renumber_half_edge(2 * f, e)}, {Int(0), Int(0)}});
    }
  }
  return pm;
}

// Inverse of a collapse of edge e of g, as a map from the collapsed graph c.
PathMap uncollapse_path_map(const LabelledGraph& g, const LabelledGraph& c, EdgeId e, VertexId survivor,
                            VertexId removed) {
  HalfEdge to_removed = g.origin(2 * e) == survivor ? 2 * e : 2 * e + 1;
  PathMap pm;
  for (VertexId x = 0; x < c.num_vertices(); ++x) {
    VertexId orig = x >= removed ? x + 1 : x;
    pm.vmap.push_back(orig);
    pm.vertex_image.push_back(GBSWord::vertex_power(orig, Int(1)));
  }
  for (EdgeId f2 = 0; f2 < c.num_edges(); ++f2) {
    EdgeId f = f2 >= e ? f2 + 1 : f2;
    GBSWord path = GBSWord::identity(survivor);
    auto step = [&path](HalfEdge h) {
      path.edges.push_back(h);
      path.powers.push_back(Int(0));
    };
    if (g.origin(2 * f) == removed) {
      step(to_removed);
    } else {
      path.base = g.origin(2 * f);
    }
    step(2 * f);
    if (g.origin(2 * f + 1) == removed) step(reverse(to_removed));
    pm.edge_image.push_back(path);
  }
  return pm;
}

}  // namespace

HomCertificate move_certificate(const LabelledGraph& g, const MoveResult& m) {
  const MoveRecord& r = m.record;
  PathMap pm;
  switch (r.kind) {
    case MoveKind::SignChangeVertex:
      pm = identity_path_map(g);
      pm.vertex_image[r.location].powers[0] = -1;
      break;
    case MoveKind::SignChangeEdge:
      pm = identity_path_map(g);
      break;
    case MoveKind::Displacement:
      pm = identity_path_map(g);
      pm.vertex_image[g.origin(r.location)].powers[0] = r.params.at(0);
      break;
    case MoveKind::Collapse: {
      EdgeId e = r.location;
      HalfEdge to_removed = g.origin(2 * e) == r.survivor ? 2 * e : 2 * e + 1;
      Int exp = g.label(to_removed) * g.label(reverse(to_removed));
      pm = merge_path_map(g, e, r.survivor, r.removed, Int(1), exp);
      break;
    }
    case MoveKind::Contraction: {
      EdgeId e = r.location;
      Int d = gcd(g.label(2 * e), g.label(2 * e + 1));
      pm = merge_path_map(g, e, r.survivor, r.removed, g.label(2 * e + 1) / d, g.label(2 * e) / d);
      break;
    }
    case MoveKind::Expansion: {
      EdgeId added = m.graph.num_edges() - 1;
      MoveResult back = collapse(m.graph, added);
      HomCertificate c = move_inverse_certificate(m.graph, back);
      c.provenance = "expansion";
      return c;
    }
  }
  HomCertificate c = certificate_from_path_map(g, m.graph, pm, move_kind_name(r.kind));
  find_witnesses(c);
  return c;
}

HomCertificate move_inverse_certificate(const LabelledGraph& g, const MoveResult& m) {
  const MoveRecord& r = m.record;
  PathMap pm;
  switch (r.kind) {
    case MoveKind::SignChangeVertex:
    case MoveKind::SignChangeEdge: {
      HomCertificate c = move_certificate(m.graph, MoveResult{g, r});
      c.provenance += " inverse";
      return c;
    }
    case MoveKind::Collapse:
      pm = uncollapse_path_map(g, m.graph, r.location, r.survivor, r.removed);
      break;
    case MoveKind::Expansion: {
      EdgeId added = m.graph.num_edges() - 1;
      HomCertificate c = move_certificate(m.graph, collapse(m.graph, added));
      c.provenance = "expansion inverse";
      return c;
    }
    default:
      throw InputError(move_kind_name(r.kind) + " is not invertible");
  }
  HomCertificate c = certificate_from_path_map(m.graph, g, pm, move_kind_name(r.kind) + " inverse");
  find_witnesses(c);
  return c;
}

HomCertificate contraction_epi(const LabelledGraph& g, EdgeId e) {
  MoveResult m = contraction_move(g, e);
  HomCertificate c = move_certificate(g, m);
  c.provenance = "contraction of edge " + g.edge_name(e);
  return c;
}

ReductionCertificates reduction_certificates(const LabelledGraph& g) {
  ReductionCertificates out{g, {}, identity_certificate(g), identity_certificate(g)};
  while (true) {
    EdgeId pick = -1;
    for (EdgeId e = 0; e < out.reduced.num_edges(); ++e) {
      if (out.reduced.is_loop(e)) continue;
      if (abs_int(out.reduced.label(2 * e)) == 1 || abs_int(out.reduced.label(2 * e + 1)) == 1) {
        pick = e;
        break;
      }
    }
    if (pick < 0) break;
    MoveResult m = collapse(out.reduced, pick);
    out.forward = compose(out.forward, move_certificate(out.reduced, m));
    out.backward = compose(move_inverse_certificate(out.reduced, m), out.backward);
    out.reduced = m.graph;
    out.moves.push_back(m.record);
  }
  return out;
}

bool elliptic_generators_stay_elliptic(const HomCertificate& c) {
  Presentation p = c.source_presentation();
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (p.generators[i].kind == Generator::Vertex && !is_elliptic(c.target, c.images[i])) return false;
  }
  return true;
}

bool stable_moduli_preserved(const HomCertificate& c) {
  SpanningTree t = c.source_tree();
  Presentation p = standard_presentation(c.source, t);
  for (size_t i = 0; i < p.generators.size(); ++i) {
    if (p.generators[i].kind != Generator::Stable) continue;
    Rational want = modulus(c.source, stable_letter_word(c.source, t, p.generators[i].id));
    if (modulus(c.target, c.images[i]) != want) return false;
  }
  return true;
}

}  // namespace gbs
