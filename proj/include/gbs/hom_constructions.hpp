#pragma once

#include <optional>
#include <vector>

#include "gbs/hom.hpp"
#include "gbs/shape.hpp"

namespace gbs {

// Words in the standard graph of BS(m, n): a is the vertex, t the odd
// half-edge of the loop, so t a^m t^-1 = a^n.
GBSWord bs_a(const Int& k);
GBSWord bs_t(const Int& k);
GBSWord bs_product(const std::vector<GBSWord>& parts);

struct NonHopfResult {
  HomCertificate phi;          // BS(m, n) -> BS(m, n), a -> a^p, t -> t
  GBSWord kernel_witness;      // nontrivial word with trivial image
  Int p;
};
// Throws InputError when BS(m, n) is Hopfian.
NonHopfResult non_hopf_endo(const Int& m, const Int& n);

// BS(m, n) onto the group of a reduced segment, lollipop or circle: a goes to
// the generator at v_0 (or v_k, or w_0) and t to the other generator.
// Throws InputError when (m, n) is not an admissible multiple.
HomCertificate theorem_deBS_epi(const LabelledGraph& g, const Int& m, const Int& n);

// Least i0 in [0, l) such that every prime dividing both M and N divides no
// x_i with i > i0 and no y_j with j <= i0 (y[j-1] holds y_j).
std::optional<int> hop_i0(const std::vector<Int>& x, const std::vector<Int>& y, const Int& M, const Int& N);

// Epimorphism from a reduced lollipop or circle onto BS(QX, QY), built from
// contraction and displacement moves, collapses and, when needed, the
// explicit two-edge formula. Throws InputError when no such map exists.
HomCertificate theorem_hop_epi(const LabelledGraph& g);

// Isomorphism from a one-loop graph onto bs_graph(M, N) when the labels are
// +-(M, N) or +-(N, M).
HomCertificate loop_identification(const LabelledGraph& loop, const Int& M, const Int& N);

// G_n = <a, b, t | a^6 = b^(2^n), t b^3 t^-1 = b^6> as a lollipop.
LabelledGraph chain_graph(int n);
HomCertificate chain_source_epi(int n);  // BS(18, 36) -> G_n
HomCertificate chain_step_epi(int n);    // G_n -> G_{n+1}
HomCertificate chain_target_epi(int n);  // G_n -> BS(9, 18)

}  // namespace gbs
