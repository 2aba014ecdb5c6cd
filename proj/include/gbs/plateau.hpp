#pragma once

#include <vector>

#include "gbs/graph.hpp"
#include "gbs/shape.hpp"

namespace gbs {

// A p-plateau: a connected subgraph P such that a half-edge starting in P is
// outside P exactly when its label is divisible by p. P is determined by its
// vertex set.
struct Plateau {
  Int p;
  std::vector<VertexId> vertices;  // ascending
};

// All p-plateaus of the graph.
std::vector<Plateau> plateaus(const LabelledGraph& g, const Int& p);
// Reference implementation by enumeration of all vertex subsets.
std::vector<Plateau> plateaus_by_subsets(const LabelledGraph& g, const Int& p);
// True if the vertex set satisfies the plateau conditions for p.
bool is_plateau(const LabelledGraph& g, const Int& p, const std::vector<VertexId>& vertices);

// Primes dividing at least one label.
std::vector<Int> label_primes(const LabelledGraph& g);
// Plateaus over all primes dividing some label, plus the whole graph.
std::vector<Plateau> all_plateaus(const LabelledGraph& g);

struct RankReport {
  int beta = 0;
  int mu = 0;
  int rank = 0;
  std::vector<VertexId> hitting_set;
};

// Requires a reduced graph (InputError otherwise). `order` optionally permutes
// the vertex enumeration order; the minimum does not depend on it.
RankReport mu(const LabelledGraph& g, const std::vector<VertexId>& order = {});

// Vertices lying in every plateau, ascending.
std::vector<VertexId> vertices_in_every_plateau(const LabelledGraph& g);

// Shape with circles numbered so that w_0 is the lowest-id vertex lying in
// every plateau.
Shape classify(const LabelledGraph& g);

struct TwoGenReport {
  bool two_generated = false;
  RankReport rank;
  Shape shape;
  VertexId circle_base = -1;
};
TwoGenReport is_two_generated(const LabelledGraph& g);

// Coprimality conditions that hold for every reduced 2-generated graph.
std::vector<std::string> check_copr(const Shape& s);

}  // namespace gbs
