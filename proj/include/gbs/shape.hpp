#pragma once

#include <string>
#include <vector>

#include "gbs/graph.hpp"

namespace gbs {

// Homeomorphism type of a graph representing a 2-generated group.
//
// Segment: vertices v_0..v_k, edge v_i v_{i+1} labelled q_i near v_i and
// r_{i+1} near v_{i+1}. Circle: vertices w_0..w_{l-1}, edge w_j w_{j+1}
// labelled x_j near w_j and y_{j+1} near w_{j+1} (indices mod l). Lollipop: a
// segment v_0..v_k with v_k = w_0 on a circle.
struct Shape {
  enum Kind { Segment, Circle, Lollipop, Other } kind = Other;
  int k = 0;
  int l = 0;
  std::vector<Int> q, r;  // q[0..k-1], r[0..k-1] holding r_1..r_k
  std::vector<Int> x, y;  // x[0..l-1], y[0..l-1] holding y_1..y_l

  // Graph positions read off during classification.
  std::vector<VertexId> seg_vertices;    // v_0..v_k
  std::vector<HalfEdge> seg_half_edges;  // v_i -> v_{i+1}
  std::vector<VertexId> circ_vertices;   // w_0..w_{l-1}
  std::vector<HalfEdge> circ_half_edges; // w_j -> w_{j+1}

  std::string kind_name() const;
};

struct QRXY {
  Int Q = 1, R = 1, X = 1, Y = 1;
  bool has_xy = false;
};

// Classifies the graph. For circles and lollipops the circle starts at
// `circle_base` if it is on the circle (otherwise at the junction for a
// lollipop, or the lowest vertex id for a circle); the direction follows the
// lowest-id edge at w_0 (its even half-edge for a loop).
Shape classify_shape(const LabelledGraph& g, VertexId circle_base = -1);
QRXY qrxy(const Shape& s);

std::string shape_to_string(const Shape& s);

// Graphs from the shorthand arrays.
LabelledGraph segment_graph(const std::vector<Int>& q, const std::vector<Int>& r);
LabelledGraph circle_graph(const std::vector<Int>& x, const std::vector<Int>& y);
LabelledGraph lollipop_graph(const std::vector<Int>& q, const std::vector<Int>& r,
                             const std::vector<Int>& x, const std::vector<Int>& y);

}  // namespace gbs
