#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/number_theory.hpp"
#include "gbs/word.hpp"

namespace gbs::testing {

inline Int random_label(std::mt19937& rng, int max_abs) {
  std::uniform_int_distribution<int> d(1, max_abs);
  int v = d(rng);
  return (rng() & 1) ? Int(v) : Int(-v);
}

// Connected graph: a random tree on `vertices` vertices plus `extra` edges
// (loops allowed), labels in [-max_abs, max_abs] \ {0}.
inline LabelledGraph random_graph(std::mt19937& rng, int vertices, int extra, int max_abs) {
  LabelledGraph g;
  for (int v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
  int e = 0;
  for (int v = 1; v < vertices; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    g.add_edge("e" + std::to_string(e++), parent(rng), v, random_label(rng, max_abs), random_label(rng, max_abs));
  }
  std::uniform_int_distribution<int> any(0, vertices - 1);
  for (int i = 0; i < extra; ++i) {
    g.add_edge("e" + std::to_string(e++), any(rng), any(rng), random_label(rng, max_abs), random_label(rng, max_abs));
  }
  return g;
}

inline std::vector<Int> random_labels(std::mt19937& rng, int count, int max_abs) {
  std::vector<Int> out;
  for (int i = 0; i < count; ++i) out.push_back(random_label(rng, max_abs));
  return out;
}

// Closed word at `base`: a random walk of `steps` traversals closed up along the
// spanning tree, with vertex powers in [-max_power, max_power].
inline GBSWord random_word(std::mt19937& rng, const LabelledGraph& g, const SpanningTree& t,
                           VertexId base, int steps, int max_power) {
  std::uniform_int_distribution<int> pw(-max_power, max_power);
  GBSWord w;
  w.base = base;
  w.powers = {Int(pw(rng))};
  VertexId at = base;
  auto step = [&](HalfEdge h) {
    w.edges.push_back(h);
    w.powers.push_back(Int(pw(rng)));
    at = g.terminus(h);
  };
  for (int i = 0; i < steps; ++i) {
    std::vector<HalfEdge> out = g.half_edges_at(at);
    if (out.empty()) break;
    step(out[rng() % out.size()]);
  }
  for (HalfEdge h : t.path_to_base(at)) step(h);
  return w;
}

// Least positive N with a_0^{r0 N} in <a_k>, by testing the divisors of
// |q_0...q_{k-1}| in increasing order against the divisibility chain.
inline Int center_index_oracle(const Int& r0, const std::vector<Int>& q, const std::vector<Int>& r) {
  Int prod = 1;
  for (const Int& x : q) prod *= abs_int(x);
  std::vector<Int> divs;
  for (Int d = 1; d * d <= prod; ++d) {
    if (prod % d == 0) {
      divs.push_back(d);
      if (d * d != prod) divs.push_back(Int(prod / d));
    }
  }
  std::sort(divs.begin(), divs.end());
  for (const Int& n : divs) {
    Int c = r0 * n;
    bool ok = true;
    for (size_t j = 0; j < q.size() && ok; ++j) {
      if (c % q[j] != 0) ok = false;
      else c = c / q[j] * r[j];
    }
    if (ok) return n;
  }
  return prod;
}

}  // namespace gbs::testing
