#include "gbs/modular.hpp"

#include "gbs/letters.hpp"
#include "gbs/word.hpp"

namespace gbs {

std::vector<Rational> loop_moduli(const LabelledGraph& g) {
  SpanningTree t = spanning_tree(g, 0);
  std::vector<Rational> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!t.in_tree[e]) out.push_back(modulus(g, stable_letter_word(g, t, e)));
  }
  return out;
}

RationalMultGroup modular_image(const LabelledGraph& g) { return RationalMultGroup(loop_moduli(g)); }

bool is_unimodular(const LabelledGraph& g) { return modular_image(g).is_subgroup_of_pm1(); }

bool has_nontrivial_center(const LabelledGraph& g) { return modular_image(g).is_trivial(); }

}  // namespace gbs
