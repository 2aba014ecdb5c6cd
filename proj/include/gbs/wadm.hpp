#pragma once

#include <string>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/json_util.hpp"
#include "gbs/moves.hpp"

namespace gbs {

// Morphism from `source` to `target` with positive multiplicities. Half-edge
// 2e of the source maps to edge_image[e], and 2e+1 to its reverse.
struct WeaklyAdmissibleMap {
  LabelledGraph source;
  LabelledGraph target;
  std::vector<VertexId> vertex_image;
  std::vector<HalfEdge> edge_image;
  std::vector<Int> vertex_mult;
  std::vector<Int> edge_mult;

  HalfEdge image(HalfEdge h) const { return h % 2 == 0 ? edge_image[h / 2] : reverse(edge_image[h / 2]); }
};

struct Violation {
  std::string location;  // "vertex x", "half-edge h", "edge e" of the source
  std::string message;
};

struct WadmReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Local conditions: for every x and every target half-edge e at the image of
// x, with k = gcd(m_x, label(e)), at most k source half-edges at x map to e,
// each labelled label(e)/k, on an edge of multiplicity m_x/k.
WadmReport check_weakly_admissible(const WeaklyAdmissibleMap& f);
// Same with exactly k preimages.
WadmReport check_admissible(const WeaklyAdmissibleMap& f);

// Builds a map whose source labels and edge multiplicities are derived from
// the local rule at the origin of each edge. The source graph supplies the
// combinatorics only; its labels are overwritten.
WeaklyAdmissibleMap derive_map(LabelledGraph source, const LabelledGraph& target,
                               const std::vector<VertexId>& vertex_image, const std::vector<HalfEdge>& edge_image,
                               const std::vector<Int>& vertex_mult);

Json wadm_to_json(const WeaklyAdmissibleMap& f);
WeaklyAdmissibleMap wadm_from_json(const Json& j);
Json violation_to_json(const Violation& v);

}  // namespace gbs
