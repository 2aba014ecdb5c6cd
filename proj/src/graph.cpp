#include "gbs/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gbs/errors.hpp"
#include "gbs/limits.hpp"

namespace gbs {

VertexId LabelledGraph::add_vertex(const std::string& name) {
  vertex_names_.push_back(name);
  return num_vertices() - 1;
}

EdgeId LabelledGraph::add_edge(const std::string& name, VertexId v, VertexId w,
                               const Int& lv, const Int& lw) {
  if (v < 0 || v >= num_vertices() || w < 0 || w >= num_vertices()) {
    throw InputError("edge '" + name + "' has an endpoint that is not a vertex");
  }
  if (lv == 0 || lw == 0) throw InputError("edge '" + name + "' has a zero label");
  edge_names_.push_back(name);
  half_.push_back(HalfEdgeData{v, lv});
  half_.push_back(HalfEdgeData{w, lw});
  return num_edges() - 1;
}

VertexId LabelledGraph::find_vertex(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  return it == vertex_names_.end() ? -1 : static_cast<VertexId>(it - vertex_names_.begin());
}

EdgeId LabelledGraph::find_edge(const std::string& name) const {
  auto it = std::find(edge_names_.begin(), edge_names_.end(), name);
  return it == edge_names_.end() ? -1 : static_cast<EdgeId>(it - edge_names_.begin());
}

std::vector<HalfEdge> LabelledGraph::half_edges_at(VertexId v) const {
  std::vector<HalfEdge> out;
  for (HalfEdge h = 0; h < num_half_edges(); ++h) {
    if (half_[h].origin == v) out.push_back(h);
  }
  return out;
}

int LabelledGraph::degree(VertexId v) const {
  int d = 0;
  for (const auto& he : half_) d += he.origin == v;
  return d;
}

void LabelledGraph::set_label(HalfEdge h, const Int& label) {
  if (label == 0) throw InternalError("zero label produced by a move");
  half_[h].label = label;
}

bool LabelledGraph::is_connected() const {
  if (num_vertices() == 0) return false;
  std::vector<bool> seen(num_vertices(), false);
  std::vector<std::vector<VertexId>> adj(num_vertices());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    adj[origin(2 * e)].push_back(origin(2 * e + 1));
    adj[origin(2 * e + 1)].push_back(origin(2 * e));
  }
  std::deque<VertexId> queue{0};
  seen[0] = true;
  int count = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == num_vertices();
}

void LabelledGraph::validate() const {
  if (num_vertices() == 0) throw InputError("graph has no vertices");
  check_vertex_cap(vertex_names_.size());
  std::set<std::string> names;
  for (const auto& n : vertex_names_) {
    if (!names.insert(n).second) throw InputError("duplicate vertex name '" + n + "'");
  }
  names.clear();
  for (const auto& n : edge_names_) {
    if (!names.insert(n).second) throw InputError("duplicate edge name '" + n + "'");
  }
  for (const auto& he : half_) {
    if (he.label == 0) throw InputError("zero label");
    if (he.origin < 0 || he.origin >= num_vertices()) throw InputError("bad edge endpoint");
  }
  if (!is_connected()) throw InputError("graph is not connected");
}

bool LabelledGraph::operator==(const LabelledGraph& other) const {
  if (num_vertices() != other.num_vertices() || num_edges() != other.num_edges()) return false;
  for (HalfEdge h = 0; h < num_half_edges(); ++h) {
    if (origin(h) != other.origin(h) || label(h) != other.label(h)) return false;
  }
  return true;
}

std::vector<HalfEdge> SpanningTree::path_from_base(VertexId v) const {
  std::vector<HalfEdge> out;
  while (parent[v] >= 0) {
    out.push_back(parent_half[v]);
    v = parent[v];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<HalfEdge> SpanningTree::path_to_base(VertexId v) const {
  std::vector<HalfEdge> out;
  while (parent[v] >= 0) {
    out.push_back(reverse(parent_half[v]));
    v = parent[v];
  }
  return out;
}

SpanningTree spanning_tree(const LabelledGraph& g, VertexId base) {
  if (base < 0 || base >= g.num_vertices()) throw InputError("base vertex out of range");
  SpanningTree t;
  t.base = base;
  t.in_tree.assign(g.num_edges(), false);
  t.parent_half.assign(g.num_vertices(), -1);
  t.parent.assign(g.num_vertices(), -1);
  t.depth.assign(g.num_vertices(), -1);
  t.depth[base] = 0;
  std::deque<VertexId> queue{base};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (HalfEdge h : g.half_edges_at(v)) {
      VertexId w = g.terminus(h);
      if (t.depth[w] >= 0) continue;
      t.depth[w] = t.depth[v] + 1;
      t.parent[w] = v;
      t.parent_half[w] = h;
      t.in_tree[edge_of(h)] = true;
      queue.push_back(w);
    }
  }
  for (int d : t.depth) {
    if (d < 0) throw InputError("graph is not connected");
  }
  return t;
}

SpanningTree spanning_tree_from_edges(const LabelledGraph& g, VertexId base,
                                      const std::vector<EdgeId>& edges) {
  if (base < 0 || base >= g.num_vertices()) throw InputError("base vertex out of range");
  std::vector<bool> allowed(g.num_edges(), false);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.num_edges()) throw InputError("tree edge out of range");
    allowed[e] = true;
  }
  if (static_cast<int>(edges.size()) != g.num_vertices() - 1) {
    throw InputError("not a spanning tree: wrong number of edges");
  }
  SpanningTree t;
  t.base = base;
  t.in_tree.assign(g.num_edges(), false);
  t.parent_half.assign(g.num_vertices(), -1);
  t.parent.assign(g.num_vertices(), -1);
  t.depth.assign(g.num_vertices(), -1);
  t.depth[base] = 0;
  std::deque<VertexId> queue{base};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (HalfEdge h : g.half_edges_at(v)) {
      if (!allowed[edge_of(h)] || t.in_tree[edge_of(h)]) continue;
      VertexId w = g.terminus(h);
      if (t.depth[w] >= 0) throw InputError("not a spanning tree: contains a cycle");
      t.depth[w] = t.depth[v] + 1;
      t.parent[w] = v;
      t.parent_half[w] = h;
      t.in_tree[edge_of(h)] = true;
      queue.push_back(w);
    }
  }
  for (int d : t.depth) {
    if (d < 0) throw InputError("not a spanning tree: does not reach every vertex");
  }
  return t;
}

int betti(const LabelledGraph& g) {
  if (!g.is_connected()) throw InputError("graph is not connected");
  return g.num_edges() - g.num_vertices() + 1;
}

bool is_reduced(const LabelledGraph& g) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.is_loop(e)) continue;
    if (abs_int(g.label(2 * e)) == 1 || abs_int(g.label(2 * e + 1)) == 1) return false;
  }
  return true;
}

std::string Presentation::generator_name(const LabelledGraph& g, int index) const {
  const Generator& gen = generators[index];
  if (gen.kind == Generator::Vertex) return "a(" + g.vertex_name(gen.id) + ")";
  return "t(" + g.edge_name(gen.id) + ")";
}

Presentation standard_presentation(const LabelledGraph& g, const SpanningTree& t) {
  if (static_cast<int>(t.in_tree.size()) != g.num_edges() ||
      static_cast<int>(t.parent.size()) != g.num_vertices()) {
    throw InputError("spanning tree does not belong to this graph");
  }
  Presentation p;
  p.vertex_gen.assign(g.num_vertices(), -1);
  p.stable_gen.assign(g.num_edges(), -1);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    p.vertex_gen[v] = static_cast<int>(p.generators.size());
    p.generators.push_back(Generator{Generator::Vertex, v});
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (t.in_tree[e]) continue;
    p.stable_gen[e] = static_cast<int>(p.generators.size());
    p.generators.push_back(Generator{Generator::Stable, e});
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int av = p.vertex_gen[g.origin(2 * e)];
    int aw = p.vertex_gen[g.origin(2 * e + 1)];
    LetterWord r;
    if (t.in_tree[e]) {
      r = {Letter{av, g.label(2 * e)}, Letter{aw, -g.label(2 * e + 1)}};
    } else {
      int te = p.stable_gen[e];
      r = {Letter{te, 1}, Letter{av, g.label(2 * e)}, Letter{te, -1},
           Letter{aw, -g.label(2 * e + 1)}};
    }
    p.relators.push_back(r);
  }
  return p;
}

std::string letters_to_string(const LabelledGraph& g, const Presentation& p,
                              const LetterWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += " ";
    s += p.generator_name(g, l.gen);
    if (l.exp != 1) s += "^" + to_string(l.exp);
  }
  return s;
}

LabelledGraph bs_graph(const Int& m, const Int& n) {
  LabelledGraph g;
  g.add_vertex("a");
  g.add_edge("t", 0, 0, m, n);
  return g;
}

}  // namespace gbs
