#pragma once

#include <vector>

#include "gbs/graph.hpp"
#include "gbs/wadm.hpp"

namespace gbs {

// Circle x0 -> x1 -> ... -> x0 over `target`: edge i goes from x_i to
// x_{i+1} and maps to images[i]; mults[i] is the multiplicity of x_i.
WeaklyAdmissibleMap circle_cover(const LabelledGraph& target, const std::vector<HalfEdge>& images,
                                 const std::vector<Int>& mults);

// Run of edges over a loop target: `reversed` edges map to the odd
// half-edge; multiplicities move by `ratio` per edge.
struct Block {
  long length = 0;
  bool reversed = false;
  Rational ratio = 1;
};
// Circle built from blocks starting at multiplicity `start`. Throws
// InternalError if the progression leaves the integers or does not close.
WeaklyAdmissibleMap loop_blocks(const LabelledGraph& target, const std::vector<Block>& blocks, const Int& start);

// Seven-block circle over BS(scale m, scale n) for coprime m, n, reducing to
// the loop (m^(x+beta) n^y, m^x n^(y+beta)).
WeaklyAdmissibleMap gros_map(const Int& m, const Int& n, long x, long y, long beta, const Int& scale,
                             std::vector<Block>* blocks_out = nullptr);
// Circle of x edges labelled (Delta, 1) and y edges labelled (1, Delta) over
// BS(m, Delta m), all multiplicities |m|. With `hair`, an extra edge of
// labels (1, m) to a vertex of multiplicity |Delta|.
WeaklyAdmissibleMap simp_map(const Int& m, const Int& delta, long x, long y, bool hair);
// Circle of beta edges over BS(u, n) with u = +-1, multiplicities 1.
WeaklyAdmissibleMap cover_map(const Int& u, const Int& n, long beta);
// Three-block circle over a circle graph with coprime products X, Y.
WeaklyAdmissibleMap trg_map(const LabelledGraph& circle);
// Loop (r, s) into the amalgam graph a --(nu, 1)-- b with loop (r, s) at b.
LabelledGraph amalgam_graph(const Int& nu, const Int& r, const Int& s);
WeaklyAdmissibleMap aug1_map(const Int& r, const Int& s, const Int& nu);
// Adds the (nu, 1) hair to a map over a one-vertex loop target, at source
// vertex x with multiplicity coprime to nu. The target becomes amalgam_graph.
WeaklyAdmissibleMap add_hair(const WeaklyAdmissibleMap& f, VertexId x, const Int& nu);

}  // namespace gbs
