#include "gbs/moves.hpp"

#include <algorithm>
#include <deque>

#include "gbs/errors.hpp"

namespace gbs {

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::SignChangeVertex: return "sign-change-vertex";
    case MoveKind::SignChangeEdge: return "sign-change-edge";
    case MoveKind::Collapse: return "collapse";
    case MoveKind::Expansion: return "expansion";
    case MoveKind::Contraction: return "contraction";
    case MoveKind::Displacement: return "displacement";
  }
  return "unknown";
}

namespace {

bool is_unit(const Int& a) { return a == 1 || a == -1; }

void check_edge(const LabelledGraph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) throw InputError("edge id out of range");
}

}  // namespace

LabelledGraph merge_along_edge(const LabelledGraph& g, EdgeId e, VertexId survivor,
                               const Int& factor_survivor, const Int& factor_removed) {
  VertexId a = g.origin(2 * e);
  VertexId b = g.origin(2 * e + 1);
  VertexId removed = survivor == a ? b : a;
  LabelledGraph out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v != removed) out.add_vertex(g.vertex_name(v));
  }
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    if (f == e) continue;
    VertexId ends[2];
    Int labels[2];
    for (int side = 0; side < 2; ++side) {
      HalfEdge h = 2 * f + side;
      VertexId o = g.origin(h);
      labels[side] = g.label(h);
      if (o == removed) {
        labels[side] *= factor_removed;
        o = survivor;
      } else if (o == survivor) {
        labels[side] *= factor_survivor;
      }
      ends[side] = renumber_vertex(o, removed);
    }
    out.add_edge(g.edge_name(f), ends[0], ends[1], labels[0], labels[1]);
  }
  return out;
}

MoveResult collapse(const LabelledGraph& g, EdgeId e) {
  check_edge(g, e);
  if (g.is_loop(e)) throw InputError("cannot collapse a loop");
  HalfEdge unit_side;
  if (is_unit(g.label(2 * e + 1))) {
    unit_side = 2 * e + 1;
  } else if (is_unit(g.label(2 * e))) {
    unit_side = 2 * e;
  } else {
    throw InputError("collapse needs a label +-1 on edge '" + g.edge_name(e) + "'");
  }
  VertexId removed = g.origin(unit_side);
  VertexId survivor = g.origin(reverse(unit_side));
  Int factor = g.label(unit_side) * g.label(reverse(unit_side));
  MoveResult res{merge_along_edge(g, e, survivor, Int(1), factor), {}};
  res.record.kind = MoveKind::Collapse;
  res.record.location = e;
  res.record.survivor = survivor;
  res.record.removed = removed;
  return res;
}

std::pair<LabelledGraph, std::vector<MoveRecord>> reduce(const LabelledGraph& g) {
  LabelledGraph cur = g;
  std::vector<MoveRecord> recs;
  while (true) {
    EdgeId pick = -1;
    for (EdgeId e = 0; e < cur.num_edges(); ++e) {
      if (cur.is_loop(e)) continue;
      if (is_unit(cur.label(2 * e)) || is_unit(cur.label(2 * e + 1))) {
        pick = e;
        break;
      }
    }
    if (pick < 0) break;
    MoveResult r = collapse(cur, pick);
    cur = std::move(r.graph);
    recs.push_back(r.record);
  }
  return {cur, recs};
}

MoveResult sign_change_vertex(const LabelledGraph& g, VertexId v) {
  if (v < 0 || v >= g.num_vertices()) throw InputError("vertex id out of range");
  LabelledGraph out = g;
  for (HalfEdge h : g.half_edges_at(v)) out.set_label(h, -g.label(h));
  return {out, MoveRecord{MoveKind::SignChangeVertex, v, {}, {}, -1, -1}};
}

MoveResult sign_change_edge(const LabelledGraph& g, EdgeId e) {
  check_edge(g, e);
  LabelledGraph out = g;
  out.set_label(2 * e, -g.label(2 * e));
  out.set_label(2 * e + 1, -g.label(2 * e + 1));
  return {out, MoveRecord{MoveKind::SignChangeEdge, e, {}, {}, -1, -1}};
}

MoveResult contraction_move(const LabelledGraph& g, EdgeId e) {
  check_edge(g, e);
  if (g.is_loop(e)) throw InputError("cannot contract a loop");
  const Int& q = g.label(2 * e);
  const Int& r = g.label(2 * e + 1);
  Int d = gcd(q, r);
  Int r1 = r / d;
  Int q1 = q / d;
  VertexId v = g.origin(2 * e);
  MoveResult res{merge_along_edge(g, e, v, r1, q1), {}};
  res.record.kind = MoveKind::Contraction;
  res.record.location = e;
  res.record.survivor = v;
  res.record.removed = g.origin(2 * e + 1);
  return res;
}

MoveResult displacement_move(const LabelledGraph& g, HalfEdge h, const Int& r) {
  if (h < 0 || h >= g.num_half_edges()) throw InputError("half-edge id out of range");
  if (r == 0) throw InputError("displacement factor must be nonzero");
  const Int& q = g.label(h);
  HalfEdge far = reverse(h);
  if (!divides(r, g.label(far))) {
    throw InputError("displacement factor " + to_string(r) + " does not divide the far label " +
                     to_string(g.label(far)));
  }
  if (gcd(q, r) != 1) throw InputError("displacement factor is not coprime to the near label");
  LabelledGraph out = g;
  VertexId v = g.origin(h);
  out.set_label(far, g.label(far) / r);
  for (HalfEdge x : g.half_edges_at(v)) {
    if (x == h) continue;
    out.set_label(x, out.label(x) * r);
  }
  return {out, MoveRecord{MoveKind::Displacement, h, {r}, {}, -1, -1}};
}

MoveResult expansion(const LabelledGraph& g, VertexId v, const std::vector<HalfEdge>& moved,
                     const Int& lambda) {
  if (v < 0 || v >= g.num_vertices()) throw InputError("vertex id out of range");
  if (lambda == 0) throw InputError("expansion factor must be nonzero");
  std::vector<bool> is_moved(g.num_half_edges(), false);
  for (HalfEdge h : moved) {
    if (h < 0 || h >= g.num_half_edges() || g.origin(h) != v) {
      throw InputError("expansion half-edge does not start at the chosen vertex");
    }
    if (!divides(lambda, g.label(h))) {
      throw InputError("expansion factor does not divide label " + to_string(g.label(h)));
    }
    is_moved[h] = true;
  }
  LabelledGraph out;
  for (VertexId x = 0; x < g.num_vertices(); ++x) out.add_vertex(g.vertex_name(x));
  std::string wname = g.vertex_name(v) + "'";
  while (g.find_vertex(wname) >= 0) wname += "'";
  VertexId w = out.add_vertex(wname);
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    VertexId ends[2];
    Int labels[2];
    for (int side = 0; side < 2; ++side) {
      HalfEdge h = 2 * f + side;
      ends[side] = is_moved[h] ? w : g.origin(h);
      labels[side] = is_moved[h] ? Int(g.label(h) / lambda) : g.label(h);
    }
    out.add_edge(g.edge_name(f), ends[0], ends[1], labels[0], labels[1]);
  }
  std::string ename = "x" + std::to_string(g.num_edges());
  while (g.find_edge(ename) >= 0) ename += "'";
  out.add_edge(ename, v, w, lambda, Int(1));
  MoveRecord rec{MoveKind::Expansion, v, {lambda}, moved, -1, -1};
  return {out, rec};
}

LabelledGraph apply_move(const LabelledGraph& g, const MoveRecord& rec) {
  switch (rec.kind) {
    case MoveKind::SignChangeVertex: return sign_change_vertex(g, rec.location).graph;
    case MoveKind::SignChangeEdge: return sign_change_edge(g, rec.location).graph;
    case MoveKind::Collapse: return collapse(g, rec.location).graph;
    case MoveKind::Contraction: return contraction_move(g, rec.location).graph;
    case MoveKind::Displacement:
      if (rec.params.size() != 1) throw InputError("displacement record needs one factor");
      return displacement_move(g, rec.location, rec.params[0]).graph;
    case MoveKind::Expansion:
      if (rec.params.size() != 1) throw InputError("expansion record needs one factor");
      return expansion(g, rec.location, rec.half_edges, rec.params[0]).graph;
  }
  throw InputError("unknown move kind");
}

LabelledGraph replay(const LabelledGraph& g, const std::vector<MoveRecord>& recs) {
  LabelledGraph cur = g;
  for (const auto& r : recs) cur = apply_move(cur, r);
  return cur;
}

std::pair<LabelledGraph, std::vector<MoveRecord>> canonicalize(const LabelledGraph& g) {
  SpanningTree t = spanning_tree(g, 0);
  LabelledGraph cur = g;
  std::vector<MoveRecord> recs;
  std::vector<VertexId> order(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&t](VertexId a, VertexId b) { return t.depth[a] < t.depth[b]; });
  for (VertexId c : order) {
    if (t.parent[c] < 0) continue;
    HalfEdge down = t.parent_half[c];
    if (cur.label(down) < 0) {
      auto r = sign_change_edge(cur, edge_of(down));
      cur = r.graph;
      recs.push_back(r.record);
    }
    if (cur.label(reverse(down)) < 0) {
      auto r = sign_change_vertex(cur, c);
      cur = r.graph;
      recs.push_back(r.record);
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (t.in_tree[e]) continue;
    if (cur.label(2 * e) < 0) {
      auto r = sign_change_edge(cur, e);
      cur = r.graph;
      recs.push_back(r.record);
    }
  }
  return {cur, recs};
}

}  // namespace gbs
