#include "gbs/shape.hpp"

#include "gbs/errors.hpp"

namespace gbs {

std::string Shape::kind_name() const {
  switch (kind) {
    case Segment: return "segment";
    case Circle: return "circle";
    case Lollipop: return "lollipop";
    case Other: return "other";
  }
  return "other";
}

namespace {

// Walks the circle through w0 starting with half-edge first.
void walk_circle(const LabelledGraph& g, VertexId w0, HalfEdge first, Shape& s) {
  HalfEdge h = first;
  VertexId cur = w0;
  do {
    s.circ_vertices.push_back(cur);
    s.circ_half_edges.push_back(h);
    s.x.push_back(g.label(h));
    s.y.push_back(g.label(reverse(h)));
    cur = g.terminus(h);
    if (cur == w0) break;
    HalfEdge next = -1;
    for (HalfEdge c : g.half_edges_at(cur)) {
      if (c != reverse(h)) {
        next = c;
        break;
      }
    }
    if (next < 0) throw InternalError("circle walk failed");
    h = next;
  } while (true);
  s.l = static_cast<int>(s.circ_vertices.size());
}

HalfEdge circle_start(const LabelledGraph& g, VertexId w0, HalfEdge exclude_edge_half) {
  HalfEdge best = -1;
  for (HalfEdge h : g.half_edges_at(w0)) {
    if (exclude_edge_half >= 0 && edge_of(h) == edge_of(exclude_edge_half)) continue;
    if (best < 0 || edge_of(h) < edge_of(best) ||
        (edge_of(h) == edge_of(best) && h < best)) {
      best = h;
    }
  }
  return best;
}

}  // namespace

Shape classify_shape(const LabelledGraph& g, VertexId circle_base) {
  Shape s;
  if (!g.is_connected() || g.num_edges() == 0) return s;
  int b = g.num_edges() - g.num_vertices() + 1;
  std::vector<int> deg(g.num_vertices());
  int deg1 = 0, deg2 = 0, deg3 = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    deg[v] = g.degree(v);
    deg1 += deg[v] == 1;
    deg2 += deg[v] == 2;
    deg3 += deg[v] == 3;
  }
  const int nv = g.num_vertices();
  if (b == 0 && deg1 == 2 && deg1 + deg2 == nv) {
    s.kind = Shape::Segment;
    VertexId v = -1;
    for (VertexId u = 0; u < nv; ++u) {
      if (deg[u] == 1) {
        v = u;
        break;
      }
    }
    HalfEdge prev = -1;
    s.seg_vertices.push_back(v);
    while (true) {
      HalfEdge next = -1;
      for (HalfEdge h : g.half_edges_at(v)) {
        if (prev < 0 || h != reverse(prev)) next = h;
      }
      if (next < 0) break;
      s.seg_half_edges.push_back(next);
      s.q.push_back(g.label(next));
      s.r.push_back(g.label(reverse(next)));
      v = g.terminus(next);
      s.seg_vertices.push_back(v);
      prev = next;
      if (deg[v] == 1) break;
    }
    s.k = static_cast<int>(s.seg_half_edges.size());
    return s;
  }
  if (b == 1 && deg2 == nv) {
    s.kind = Shape::Circle;
    VertexId w0 = (circle_base >= 0 && circle_base < nv) ? circle_base : 0;
    walk_circle(g, w0, circle_start(g, w0, -1), s);
    return s;
  }
  if (b == 1 && deg1 == 1 && deg3 == 1 && deg1 + deg2 + deg3 == nv) {
    s.kind = Shape::Lollipop;
    VertexId v = -1;
    for (VertexId u = 0; u < nv; ++u) {
      if (deg[u] == 1) v = u;
    }
    s.seg_vertices.push_back(v);
    HalfEdge prev = -1;
    while (deg[v] != 3) {
      HalfEdge next = -1;
      for (HalfEdge h : g.half_edges_at(v)) {
        if (prev < 0 || h != reverse(prev)) {
          next = h;
          break;
        }
      }
      s.seg_half_edges.push_back(next);
      s.q.push_back(g.label(next));
      s.r.push_back(g.label(reverse(next)));
      v = g.terminus(next);
      s.seg_vertices.push_back(v);
      prev = next;
    }
    s.k = static_cast<int>(s.seg_half_edges.size());
    walk_circle(g, v, circle_start(g, v, reverse(prev)), s);
    return s;
  }
  return s;
}

QRXY qrxy(const Shape& s) {
  if (s.kind == Shape::Other) throw InputError("shape is not a segment, circle or lollipop");
  QRXY out;
  for (const auto& v : s.q) out.Q *= v;
  for (const auto& v : s.r) out.R *= v;
  if (s.kind != Shape::Segment) {
    out.has_xy = true;
    for (const auto& v : s.x) out.X *= v;
    for (const auto& v : s.y) out.Y *= v;
  }
  return out;
}

std::string shape_to_string(const Shape& s) {
  std::string out = s.kind_name();
  auto list = [](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::string t;
    for (std::size_t i = 0; i < a.size(); ++i) t += " " + to_string(a[i]) + " " + to_string(b[i]);
    return t;
  };
  if (s.kind == Shape::Segment) out += list(s.q, s.r);
  if (s.kind == Shape::Circle) out += list(s.x, s.y);
  if (s.kind == Shape::Lollipop) out += " " + std::to_string(s.k) + list(s.q, s.r) + " |" + list(s.x, s.y);
  return out;
}

LabelledGraph segment_graph(const std::vector<Int>& q, const std::vector<Int>& r) {
  if (q.empty() || q.size() != r.size()) throw InputError("segment needs matching q and r lists");
  LabelledGraph g;
  for (std::size_t i = 0; i <= q.size(); ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t i = 0; i < q.size(); ++i) {
    g.add_edge("e" + std::to_string(i), static_cast<VertexId>(i), static_cast<VertexId>(i + 1), q[i],
               r[i]);
  }
  return g;
}

LabelledGraph circle_graph(const std::vector<Int>& x, const std::vector<Int>& y) {
  if (x.empty() || x.size() != y.size()) throw InputError("circle needs matching x and y lists");
  LabelledGraph g;
  const std::size_t l = x.size();
  for (std::size_t j = 0; j < l; ++j) g.add_vertex("w" + std::to_string(j));
  for (std::size_t j = 0; j < l; ++j) {
    g.add_edge("c" + std::to_string(j), static_cast<VertexId>(j),
               static_cast<VertexId>((j + 1) % l), x[j], y[j]);
  }
  return g;
}

LabelledGraph lollipop_graph(const std::vector<Int>& q, const std::vector<Int>& r,
                             const std::vector<Int>& x, const std::vector<Int>& y) {
  if (q.empty() || q.size() != r.size()) throw InputError("lollipop needs matching q and r lists");
  if (x.empty() || x.size() != y.size()) throw InputError("lollipop needs matching x and y lists");
  LabelledGraph g;
  const std::size_t k = q.size();
  const std::size_t l = x.size();
  for (std::size_t i = 0; i < k; ++i) g.add_vertex("v" + std::to_string(i));
  for (std::size_t j = 0; j < l; ++j) g.add_vertex("w" + std::to_string(j));
  auto w = [k](std::size_t j) { return static_cast<VertexId>(k + j); };
  for (std::size_t i = 0; i < k; ++i) {
    VertexId to = i + 1 < k ? static_cast<VertexId>(i + 1) : w(0);
    g.add_edge("e" + std::to_string(i), static_cast<VertexId>(i), to, q[i], r[i]);
  }
  for (std::size_t j = 0; j < l; ++j) {
    g.add_edge("c" + std::to_string(j), w(j), w((j + 1) % l), x[j], y[j]);
  }
  return g;
}

}  // namespace gbs
