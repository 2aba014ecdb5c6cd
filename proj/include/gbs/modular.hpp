#pragma once

#include "gbs/graph.hpp"
#include "gbs/rational_group.hpp"

namespace gbs {

// Modulus of the fundamental loop of each non-tree edge (in edge order).
std::vector<Rational> loop_moduli(const LabelledGraph& g);
// Image of the modular homomorphism.
RationalMultGroup modular_image(const LabelledGraph& g);
bool is_unimodular(const LabelledGraph& g);
// Nontrivial center for a non-elementary group: the modular image is trivial.
bool has_nontrivial_center(const LabelledGraph& g);

}  // namespace gbs
