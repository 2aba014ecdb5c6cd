#include "gbs/plateau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "gbs/errors.hpp"
#include "gbs/limits.hpp"

namespace gbs {

bool is_plateau(const LabelledGraph& g, const Int& p, const std::vector<VertexId>& vertices) {
  if (vertices.empty()) return false;
  std::vector<bool> in(g.num_vertices(), false);
  for (VertexId v : vertices) in[v] = true;
  // Union-find over P's edges for connectivity.
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (HalfEdge h = 0; h < g.num_half_edges(); ++h) {
    VertexId o = g.origin(h);
    if (!in[o]) continue;
    bool div = divides(p, g.label(h));
    bool inside = in[g.terminus(h)] && !divides(p, g.label(reverse(h)));
    if (inside && !div) {
      parent[find(o)] = find(g.terminus(h));
      continue;
    }
    if (!div) return false;  // non-divisible label on an edge leaving P
    if (in[g.terminus(h)] && !divides(p, g.label(reverse(h)))) return false;
  }
  int root = find(vertices[0]);
  for (VertexId v : vertices) {
    if (find(v) != root) return false;
  }
  return true;
}

std::vector<Plateau> plateaus(const LabelledGraph& g, const Int& p) {
  const int n = g.num_vertices();
  std::vector<int> comp(n, -1);
  int count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<VertexId> stack{s};
    comp[s] = count;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (HalfEdge h : g.half_edges_at(v)) {
        if (divides(p, g.label(h)) || divides(p, g.label(reverse(h)))) continue;
        VertexId w = g.terminus(h);
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  std::vector<bool> bad(count, false);
  for (HalfEdge h = 0; h < g.num_half_edges(); ++h) {
    bool here = divides(p, g.label(h));
    bool there = divides(p, g.label(reverse(h)));
    if (!here && there) bad[comp[g.origin(h)]] = true;
  }
  std::vector<Plateau> out;
  for (int c = 0; c < count; ++c) {
    if (bad[c]) continue;
    Plateau pl{p, {}};
    for (VertexId v = 0; v < n; ++v) {
      if (comp[v] == c) pl.vertices.push_back(v);
    }
    out.push_back(pl);
  }
  std::sort(out.begin(), out.end(),
            [](const Plateau& a, const Plateau& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<Plateau> plateaus_by_subsets(const LabelledGraph& g, const Int& p) {
  const int n = g.num_vertices();
  if (n > 20) throw CapExceeded("subset enumeration limited to 20 vertices");
  std::vector<Plateau> out;
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<VertexId> vs;
    for (int v = 0; v < n; ++v) {
      if (mask & (1UL << v)) vs.push_back(v);
    }
    if (is_plateau(g, p, vs)) out.push_back(Plateau{p, vs});
  }
  std::sort(out.begin(), out.end(),
            [](const Plateau& a, const Plateau& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<Int> label_primes(const LabelledGraph& g) {
  std::set<Int> ps;
  for (HalfEdge h = 0; h < g.num_half_edges(); ++h) {
    for (const auto& p : prime_divisors(g.label(h))) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

std::vector<Plateau> all_plateaus(const LabelledGraph& g) {
  std::vector<Plateau> out;
  std::vector<VertexId> everything(g.num_vertices());
  std::iota(everything.begin(), everything.end(), 0);
  // A prime dividing no label has the whole graph as its only plateau.
  out.push_back(Plateau{Int(0), everything});
  for (const auto& p : label_primes(g)) {
    for (auto& pl : plateaus(g, p)) out.push_back(std::move(pl));
  }
  return out;
}

RankReport mu(const LabelledGraph& g, const std::vector<VertexId>& order) {
  check_vertex_cap(g.num_vertices());
  if (!is_reduced(g)) throw InputError("rank formula needs a reduced graph");
  RankReport rep;
  rep.beta = betti(g);
  const int n = g.num_vertices();
  std::vector<VertexId> ord = order;
  if (ord.empty()) {
    ord.resize(n);
    std::iota(ord.begin(), ord.end(), 0);
  }
  if (static_cast<int>(ord.size()) != n) throw InputError("order must list every vertex once");
  std::vector<unsigned long> masks;
  for (const auto& pl : all_plateaus(g)) {
    unsigned long m = 0;
    for (VertexId v : pl.vertices) m |= 1UL << v;
    masks.push_back(m);
  }
  auto hits = [&masks](unsigned long set) {
    return std::all_of(masks.begin(), masks.end(), [set](unsigned long m) { return (m & set) != 0; });
  };
  // Combinations of ord of increasing size; the first hitting one is minimal.
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      unsigned long set = 0;
      for (int i : idx) set |= 1UL << ord[i];
      if (hits(set)) {
        rep.mu = size;
        for (int i : idx) rep.hitting_set.push_back(ord[i]);
        std::sort(rep.hitting_set.begin(), rep.hitting_set.end());
        rep.rank = rep.beta + rep.mu;
        return rep;
      }
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  throw InternalError("no hitting set found");
}

std::vector<VertexId> vertices_in_every_plateau(const LabelledGraph& g) {
  std::vector<bool> ok(g.num_vertices(), true);
  for (const auto& pl : all_plateaus(g)) {
    std::vector<bool> in(g.num_vertices(), false);
    for (VertexId v : pl.vertices) in[v] = true;
    for (VertexId v = 0; v < g.num_vertices(); ++v) ok[v] = ok[v] && in[v];
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (ok[v]) out.push_back(v);
  }
  return out;
}

Shape classify(const LabelledGraph& g) {
  Shape s = classify_shape(g);
  if (s.kind != Shape::Circle) return s;
  auto every = vertices_in_every_plateau(g);
  VertexId base = every.empty() ? 0 : every.front();
  return classify_shape(g, base);
}

TwoGenReport is_two_generated(const LabelledGraph& g) {
  TwoGenReport rep;
  rep.rank = mu(g);
  rep.two_generated = rep.rank.rank <= 2;
  rep.shape = classify(g);
  if (rep.shape.kind == Shape::Circle) rep.circle_base = rep.shape.circ_vertices.front();
  return rep;
}

std::vector<std::string> check_copr(const Shape& s) {
  std::vector<std::string> out;
  // q_j (index j) against r_i (stored at r[i-1]) for 1 <= i <= j <= k-1.
  for (int j = 1; j <= s.k - 1; ++j) {
    for (int i = 1; i <= j; ++i) {
      if (gcd(s.q[j], s.r[i - 1]) != 1) {
        out.push_back("q_" + std::to_string(j) + " and r_" + std::to_string(i) + " share a prime");
      }
    }
  }
  if (s.kind == Shape::Circle || s.kind == Shape::Lollipop) {
    for (int j = 1; j <= s.l - 1; ++j) {
      for (int i = 1; i <= j; ++i) {
        if (gcd(s.x[j], s.y[i - 1]) != 1) {
          out.push_back("x_" + std::to_string(j) + " and y_" + std::to_string(i) + " share a prime");
        }
      }
    }
    QRXY v = qrxy(s);
    if (abs_int(v.R) != 1) {
      for (const auto& p : prime_divisors(v.R)) {
        bool dx = divides(p, v.X);
        bool dy = divides(p, v.Y);
        if (dx == dy) {
          out.push_back("prime " + to_string(p) + " divides R and " +
                        std::string(dx ? "both X and Y" : "neither X nor Y"));
        }
      }
    }
  }
  return out;
}

}  // namespace gbs
