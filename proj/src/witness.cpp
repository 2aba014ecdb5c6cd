#include <functional>
#include <set>

#include "gbs/errors.hpp"
#include "gbs/hom.hpp"
#include "gbs/letters.hpp"
#include "gbs/limits.hpp"

namespace gbs {

namespace {

// Known powers of target generators, each with an expression over the source
// generators.
class Closure {
 public:
  explicit Closure(HomCertificate& c)
      : c_(c), tt_(c.target_tree()), tp_(standard_presentation(c.target, tt_)) {
    const LabelledGraph& t = c.target;
    gexp_.assign(t.num_vertices(), Int(0));
    gexpr_.assign(t.num_vertices(), -1);
    stab_.assign(t.num_edges(), -1);
    c_.witness_nodes = ExprTable();
    Presentation sp = c.source_presentation();
    for (size_t i = 0; i < sp.generators.size(); ++i) {
      int node = c_.witness_nodes.gen(static_cast<int>(i));
      known_.push_back({britton_reduce(t, c.images.at(i)).word, node});
    }
  }

  bool complete() const {
    for (const auto& g : gexp_) {
      if (g != 1) return false;
    }
    for (EdgeId e = 0; e < c_.target.num_edges(); ++e) {
      if (!tt_.in_tree[e] && stab_[e] < 0) return false;
    }
    return true;
  }

  // Runs transport rounds until nothing changes.
  void saturate() {
    bool changed = true;
    int rounds = 0;
    while (changed && !complete() && rounds < 64) {
      changed = false;
      ++rounds;
      for (size_t i = 0; i < known_.size(); ++i) {
        int node = known_[i].expr;
        changed |= absorb(known_[i].word, [node] { return node; });
      }
      changed |= transport();
      changed |= conjugate_known();
    }
  }

  // Offers an element with a lazily built expression.
  bool absorb(const GBSWord& w, const std::function<int()>& make_expr) {
    LetterWord letters = word_to_letters(c_.target, tt_, tp_, w);
    if (letters.empty()) return false;
    if (letters.size() == 1 && tp_.generators[letters[0].gen].kind == Generator::Vertex) {
      return offer_vertex(tp_.generators[letters[0].gen].id, letters[0].exp, make_expr);
    }
    int unknown = -1;
    for (size_t i = 0; i < letters.size(); ++i) {
      const Generator& g = tp_.generators[letters[i].gen];
      if (g.kind == Generator::Vertex) {
        if (gexp_[g.id] == 0 || !divides(gexp_[g.id], letters[i].exp)) return false;
      } else if (stab_[g.id] < 0) {
        if (unknown >= 0 || abs_int(letters[i].exp) != 1) return false;
        unknown = static_cast<int>(i);
      }
    }
    if (unknown < 0) return false;
    ExprTable& tab = c_.witness_nodes;
    auto letter_expr = [&](const Letter& l) {
      const Generator& g = tp_.generators[l.gen];
      if (g.kind == Generator::Vertex) return tab.power(gexpr_[g.id], l.exp / gexp_[g.id]);
      return tab.power(stab_[g.id], l.exp);
    };
    std::vector<int> parts;
    for (int i = unknown - 1; i >= 0; --i) parts.push_back(tab.inverse(letter_expr(letters[i])));
    parts.push_back(make_expr());
    for (size_t i = letters.size() - 1; i > static_cast<size_t>(unknown); --i) {
      parts.push_back(tab.inverse(letter_expr(letters[i])));
    }
    int node = tab.product(parts);
    if (letters[unknown].exp < 0) node = tab.inverse(node);
    stab_[tp_.generators[letters[unknown].gen].id] = node;
    return true;
  }

  const std::vector<Int>& gexp() const { return gexp_; }

  void write_witnesses() {
    c_.witnesses.assign(tp_.generators.size(), -1);
    for (size_t j = 0; j < tp_.generators.size(); ++j) {
      const Generator& g = tp_.generators[j];
      if (g.kind == Generator::Vertex) {
        if (gexp_[g.id] == 1) c_.witnesses[j] = gexpr_[g.id];
      } else {
        c_.witnesses[j] = stab_[g.id];
      }
    }
  }

 private:
  struct Known {
    GBSWord word;
    int expr;
  };

  bool offer_vertex(VertexId x, Int k, const std::function<int()>& make_expr) {
    if (k == 0) return false;
    if (gexp_[x] != 0 && divides(gexp_[x], k)) return false;
    ExprTable& tab = c_.witness_nodes;
    int expr = make_expr();
    if (k < 0) {
      k = -k;
      expr = tab.inverse(expr);
    }
    if (gexp_[x] == 0) {
      gexp_[x] = k;
      gexpr_[x] = expr;
      return true;
    }
    Bezout b = bezout(gexp_[x], k);
    std::vector<int> parts;
    if (b.u != 0) parts.push_back(tab.power(gexpr_[x], b.u));
    if (b.v != 0) parts.push_back(tab.power(expr, b.v));
    gexpr_[x] = tab.product(parts);
    gexp_[x] = b.g;
    return true;
  }

  bool transport() {
    const LabelledGraph& t = c_.target;
    ExprTable& tab = c_.witness_nodes;
    bool changed = false;
    for (EdgeId e = 0; e < t.num_edges(); ++e) {
      VertexId v = t.origin(2 * e);
      VertexId w = t.origin(2 * e + 1);
      const Int& l0 = t.label(2 * e);
      const Int& l1 = t.label(2 * e + 1);
      if (tt_.in_tree[e]) {
        if (gexp_[v] != 0) {
          Int L = lcm(gexp_[v], l0);
          int src = gexpr_[v];
          Int m = L / gexp_[v];
          changed |= offer_vertex(w, L / l0 * l1, [&] { return tab.power(src, m); });
        }
        if (gexp_[w] != 0) {
          Int L = lcm(gexp_[w], l1);
          int src = gexpr_[w];
          Int m = L / gexp_[w];
          changed |= offer_vertex(v, L / l1 * l0, [&] { return tab.power(src, m); });
        }
      } else if (stab_[e] >= 0) {
        int s = stab_[e];
        if (gexp_[v] != 0) {
          Int L = lcm(gexp_[v], l0);
          int src = gexpr_[v];
          Int m = L / gexp_[v];
          changed |= offer_vertex(w, L / l0 * l1,
                                  [&] { return tab.product({s, tab.power(src, m), tab.inverse(s)}); });
        }
        if (gexp_[w] != 0) {
          Int L = lcm(gexp_[w], l1);
          int src = gexpr_[w];
          Int m = L / gexp_[w];
          changed |= offer_vertex(v, L / l1 * l0,
                                  [&] { return tab.product({tab.inverse(s), tab.power(src, m), s}); });
        }
      }
    }
    return changed;
  }

  // Conjugates known vertex powers by the generator images.
  bool conjugate_known() {
    const LabelledGraph& t = c_.target;
    ExprTable& tab = c_.witness_nodes;
    bool changed = false;
    for (size_t i = 0; i < known_.size(); ++i) {
      const GBSWord& k = known_[i].word;
      if (k.edges.empty()) continue;
      for (VertexId x = 0; x < t.num_vertices(); ++x) {
        if (gexp_[x] == 0) continue;
        std::set<Int> mults{gexp_[x]};
        for (HalfEdge h : t.half_edges_at(x)) mults.insert(lcm(gexp_[x], t.label(h)));
        for (const Int& m : mults) {
          GBSWord p = vertex_generator_word(t, tt_, x, m);
          for (int sign : {1, -1}) {
            GBSWord conj = sign > 0 ? concat(concat(k, p), inverse(k)) : concat(concat(inverse(k), p), k);
            GBSWord red = britton_reduce(t, conj).word;
            int ke = known_[i].expr;
            int ex = gexpr_[x];
            Int pw = m / gexp_[x];
            changed |= absorb(red, [&] {
              int inner = tab.power(ex, pw);
              return sign > 0 ? tab.product({ke, inner, tab.inverse(ke)})
                              : tab.product({tab.inverse(ke), inner, ke});
            });
          }
        }
      }
    }
    return changed;
  }

  HomCertificate& c_;
  SpanningTree tt_;
  Presentation tp_;
  std::vector<Known> known_;
  std::vector<Int> gexp_;
  std::vector<int> gexpr_;
  std::vector<int> stab_;
};

}  // namespace

bool find_witnesses(HomCertificate& c, int depth) {
  if (depth < 0) depth = limits().witness_depth;
  Closure cl(c);
  cl.saturate();
  if (!cl.complete()) {
    // Breadth-first search over products of generator images.
    const size_t cap = 20000;
    int n = static_cast<int>(c.images.size());
    struct Node {
      GBSWord word;
      std::vector<std::pair<int, int>> letters;  // generator, +-1
    };
    std::vector<Node> layer{{GBSWord::identity(c.target_base), {}}};
    std::set<std::string> seen{"1"};
    size_t total = 1;
    SpanningTree tt = c.target_tree();
    std::vector<GBSWord> inv_images;
    for (const auto& w : c.images) inv_images.push_back(inverse(w));
    for (int d = 1; d <= depth && !cl.complete() && total < cap; ++d) {
      std::vector<Node> next;
      for (const auto& node : layer) {
        for (int g = 0; g < n && total < cap; ++g) {
          for (int s : {1, -1}) {
            if (!node.letters.empty() && node.letters.back().first == g && node.letters.back().second == -s) continue;
            GBSWord w = britton_reduce(c.target, concat(node.word, s > 0 ? c.images[g] : inv_images[g])).word;
            std::string key = path_to_string(c.target, w);
            if (!seen.insert(key).second) continue;
            ++total;
            Node child{w, node.letters};
            child.letters.push_back({g, s});
            cl.absorb(w, [&c, &child] {
              ExprTable& tab = c.witness_nodes;
              std::vector<int> parts;
              for (auto [gen, sign] : child.letters) parts.push_back(tab.power(tab.gen(gen), Int(sign)));
              return tab.product(parts);
            });
            next.push_back(std::move(child));
          }
        }
      }
      cl.saturate();
      layer = std::move(next);
    }
  }
  cl.write_witnesses();
  return c.has_witnesses();
}

}  // namespace gbs
