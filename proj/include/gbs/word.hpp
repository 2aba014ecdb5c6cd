#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

// Based path word a_{v0}^{p0} h_1 a_{v1}^{p1} ... h_n a_{vn}^{pn} with
// v0 = vn = base, h_i running from v_{i-1} to v_i. The traversal h satisfies
// h a_{t(h)}^{label(reverse h)} h^-1 = a_{o(h)}^{label(h)}.
struct GBSWord {
  VertexId base = 0;
  std::vector<HalfEdge> edges;
  std::vector<Int> powers{Int(0)};  // edges.size() + 1 entries

  static GBSWord identity(VertexId base) { return GBSWord{base, {}, {Int(0)}}; }
  static GBSWord vertex_power(VertexId base, const Int& exp) { return GBSWord{base, {}, {exp}}; }

  bool operator==(const GBSWord& o) const {
    return base == o.base && edges == o.edges && powers == o.powers;
  }
  size_t traversals() const { return edges.size(); }
};

// Throws InputError if the word is not a closed path at its base.
void check_word(const LabelledGraph& g, const GBSWord& w);

// Open paths may be concatenated too; the caller keeps endpoints consistent.
GBSWord concat(const GBSWord& a, const GBSWord& b);
GBSWord inverse(const GBSWord& w);
// h p h^-1-style conjugate: path along `path` from base, then w, then back.
GBSWord conjugate_by_path(const std::vector<HalfEdge>& path, const GBSWord& w,
                          VertexId base);

struct NormalForm {
  GBSWord word;
  bool trivial = false;
};

// Stack-based pinch removal, left to right.
NormalForm britton_reduce(const LabelledGraph& g, const GBSWord& w);
// Repeatedly applies a pinch chosen by the seeded generator.
NormalForm britton_reduce_random_order(const LabelledGraph& g, const GBSWord& w,
                                       std::uint32_t seed);

bool equal(const LabelledGraph& g, const GBSWord& a, const GBSWord& b);
bool is_trivial(const LabelledGraph& g, const GBSWord& w);

// Conjugates away pinches across the ends; the base may change.
GBSWord cyclic_reduce(const LabelledGraph& g, const GBSWord& w);
bool is_elliptic(const LabelledGraph& g, const GBSWord& w);

Rational traversal_modulus(const LabelledGraph& g, HalfEdge h);
Rational modulus(const LabelledGraph& g, const GBSWord& w);

// w^n in reduced form. Conjugates of vertex powers are raised directly.
GBSWord power(const LabelledGraph& g, const GBSWord& w, const Int& n);

// Index N of <a_0^{r0}> ∩ <a_k> in <a_0^{r0}> for the segment with labels
// q[i] near v_i and r[i] near v_{i+1}. Positive.
Int segment_center_index(const Int& r0, const std::vector<Int>& q, const std::vector<Int>& r);

// Path notation: a(v)^k for powers, >e and <e for the even and odd half-edge of e.
std::string path_to_string(const LabelledGraph& g, const GBSWord& w);

}  // namespace gbs
