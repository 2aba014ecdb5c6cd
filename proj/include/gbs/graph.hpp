#pragma once

#include <string>
#include <vector>

#include "gbs/number_theory.hpp"

namespace gbs {

using VertexId = int;
using EdgeId = int;
// Oriented edge. Unoriented edge i owns half-edges 2i and 2i+1, which are
// reverses of each other; the label of a half-edge is the label near its origin.
using HalfEdge = int;

inline HalfEdge reverse(HalfEdge h) { return h ^ 1; }
inline EdgeId edge_of(HalfEdge h) { return h >> 1; }

struct HalfEdgeData {
  VertexId origin = 0;
  Int label;
};

// Finite connected graph with nonzero integer labels on oriented edges.
// Values are immutable in practice: every move returns a new graph.
class LabelledGraph {
 public:
  LabelledGraph() = default;

  VertexId add_vertex(const std::string& name);
  // Edge from v to w with label lv near v and lw near w. Returns its id.
  EdgeId add_edge(const std::string& name, VertexId v, VertexId w, const Int& lv,
                  const Int& lw);

  int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
  int num_edges() const { return static_cast<int>(edge_names_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }

  VertexId origin(HalfEdge h) const { return half_[h].origin; }
  VertexId terminus(HalfEdge h) const { return half_[reverse(h)].origin; }
  const Int& label(HalfEdge h) const { return half_[h].label; }
  bool is_loop(EdgeId e) const { return origin(2 * e) == origin(2 * e + 1); }

  const std::string& vertex_name(VertexId v) const { return vertex_names_[v]; }
  const std::string& edge_name(EdgeId e) const { return edge_names_[e]; }
  VertexId find_vertex(const std::string& name) const;  // -1 if absent
  EdgeId find_edge(const std::string& name) const;      // -1 if absent

  // Half-edges with the given origin, ascending.
  std::vector<HalfEdge> half_edges_at(VertexId v) const;
  int degree(VertexId v) const;

  void set_label(HalfEdge h, const Int& label);
  void set_vertex_name(VertexId v, const std::string& name) { vertex_names_[v] = name; }

  bool is_connected() const;
  // Throws InputError on zero labels, bad endpoints, duplicate names or an
  // empty/disconnected graph; CapExceeded over the vertex cap.
  void validate() const;

  bool operator==(const LabelledGraph& other) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> edge_names_;
  std::vector<HalfEdgeData> half_;
};

// Maximal tree rooted at a base vertex; parent_half[v] is the half-edge from
// the parent of v to v (-1 at the base).
struct SpanningTree {
  VertexId base = 0;
  std::vector<bool> in_tree;      // per unoriented edge
  std::vector<HalfEdge> parent_half;
  std::vector<VertexId> parent;  // -1 at the base
  std::vector<int> depth;

  // Half-edges of the tree path from the base to v.
  std::vector<HalfEdge> path_from_base(VertexId v) const;
  // Half-edges of the tree path from v to the base.
  std::vector<HalfEdge> path_to_base(VertexId v) const;
};

// Breadth-first tree, preferring lower edge ids.
SpanningTree spanning_tree(const LabelledGraph& g, VertexId base = 0);
// Tree made of the listed edges; throws InputError if they do not form one.
SpanningTree spanning_tree_from_edges(const LabelledGraph& g, VertexId base,
                                      const std::vector<EdgeId>& edges);

// First Betti number; throws InputError on a disconnected graph.
int betti(const LabelledGraph& g);
bool is_reduced(const LabelledGraph& g);

// Standard presentation: generators a_v and t_e, one relation per edge.
struct Generator {
  enum Kind { Vertex, Stable } kind = Vertex;
  int id = 0;  // vertex id or edge id
  bool operator==(const Generator& o) const { return kind == o.kind && id == o.id; }
};

struct Letter {
  int gen = 0;  // index into Presentation::generators
  Int exp;
};
using LetterWord = std::vector<Letter>;

struct Presentation {
  std::vector<Generator> generators;
  std::vector<LetterWord> relators;  // one per unoriented edge, in edge order
  std::vector<int> vertex_gen;       // vertex id -> generator index
  std::vector<int> stable_gen;       // edge id -> generator index, -1 for tree edges

  std::string generator_name(const LabelledGraph& g, int index) const;
};

Presentation standard_presentation(const LabelledGraph& g, const SpanningTree& t);
std::string letters_to_string(const LabelledGraph& g, const Presentation& p,
                              const LetterWord& w);

// Standard one-vertex graph of BS(m, n).
LabelledGraph bs_graph(const Int& m, const Int& n);

}  // namespace gbs
