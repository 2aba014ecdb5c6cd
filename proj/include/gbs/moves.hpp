#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

enum class MoveKind { SignChangeVertex, SignChangeEdge, Collapse, Expansion, Contraction, Displacement };

std::string move_kind_name(MoveKind k);

// One step of a move sequence. Indices refer to the graph the move is applied
// to; replaying the records in order reproduces the final graph.
struct MoveRecord {
  MoveKind kind = MoveKind::Collapse;
  int location = 0;                  // vertex id, edge id, or half-edge id (displacement)
  std::vector<Int> params;           // expansion/displacement factor
  std::vector<HalfEdge> half_edges;  // expansion: half-edges moved to the new vertex
  // Filled in by the move for audit: surviving and removed vertex of an
  // edge contraction (collapse or contraction move), -1 otherwise.
  VertexId survivor = -1;
  VertexId removed = -1;
};

struct MoveResult {
  LabelledGraph graph;
  MoveRecord record;
};

// Contract a non-loop edge with a label +-1. The vertex at the +-1 side is
// removed (the terminus of the stored edge if both labels are +-1); its other
// half-edges move to the surviving vertex with labels multiplied by u*lambda.
MoveResult collapse(const LabelledGraph& g, EdgeId e);
// Repeated collapse of the lowest-id eligible edge until reduced.
std::pair<LabelledGraph, std::vector<MoveRecord>> reduce(const LabelledGraph& g);

MoveResult sign_change_vertex(const LabelledGraph& g, VertexId v);
MoveResult sign_change_edge(const LabelledGraph& g, EdgeId e);

// Contraction move on the non-loop edge e = vw (v = origin of half-edge 2e):
// labels near v are multiplied by r/(q^r) and labels near w by q/(q^r).
MoveResult contraction_move(const LabelledGraph& g, EdgeId e);

// Displacement move along half-edge h from v to w, with label q near v and
// r*s near w, q^r = 1: the label near w is divided by r and every other label
// near v is multiplied by r.
MoveResult displacement_move(const LabelledGraph& g, HalfEdge h, const Int& r);

// Elementary expansion: the listed half-edges at v move to a new vertex w with
// labels divided by lambda, joined to v by a new edge labelled lambda near v
// and 1 near w.
MoveResult expansion(const LabelledGraph& g, VertexId v, const std::vector<HalfEdge>& moved,
                     const Int& lambda);

LabelledGraph apply_move(const LabelledGraph& g, const MoveRecord& rec);
LabelledGraph replay(const LabelledGraph& g, const std::vector<MoveRecord>& recs);

// Admissible sign changes making all labels positive except at most one per
// edge outside a breadth-first spanning tree.
std::pair<LabelledGraph, std::vector<MoveRecord>> canonicalize(const LabelledGraph& g);

// Merge vertex `removed` into `survivor` along edge e. Labels of the other
// half-edges are rescaled by the given factors. Exposed for the move
// implementations and for certificate builders that need the index map.
LabelledGraph merge_along_edge(const LabelledGraph& g, EdgeId e, VertexId survivor,
                               const Int& factor_survivor, const Int& factor_removed);

// New index of a vertex after `removed` is deleted.
inline VertexId renumber_vertex(VertexId v, VertexId removed) { return v > removed ? v - 1 : v; }
// New id of a half-edge after edge e is deleted.
inline HalfEdge renumber_half_edge(HalfEdge h, EdgeId removed) {
  return edge_of(h) > removed ? h - 2 : h;
}

}  // namespace gbs
