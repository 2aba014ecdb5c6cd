#include "gbs/wadm.hpp"

#include <map>

#include "gbs/errors.hpp"
#include "gbs/graph_io.hpp"

namespace gbs {

namespace {

std::string vname(const LabelledGraph& g, VertexId x) { return "vertex " + g.vertex_name(x); }

std::string hname(const LabelledGraph& g, HalfEdge h) {
  return "half-edge " + std::string(h % 2 == 0 ? ">" : "<") + g.edge_name(edge_of(h));
}

WadmReport check(const WeaklyAdmissibleMap& f, bool exact) {
  WadmReport rep;
  auto fail = [&rep](std::string where, std::string what) {
    rep.ok = false;
    rep.violations.push_back({std::move(where), std::move(what)});
  };
  const LabelledGraph& s = f.source;
  const LabelledGraph& t = f.target;
  if (static_cast<int>(f.vertex_image.size()) != s.num_vertices() ||
      static_cast<int>(f.vertex_mult.size()) != s.num_vertices() ||
      static_cast<int>(f.edge_image.size()) != s.num_edges() ||
      static_cast<int>(f.edge_mult.size()) != s.num_edges()) {
    fail("map", "table sizes do not match the source graph");
    return rep;
  }
  bool morphism = true;
  for (VertexId x = 0; x < s.num_vertices(); ++x) {
    if (f.vertex_image[x] < 0 || f.vertex_image[x] >= t.num_vertices()) {
      fail(vname(s, x), "image vertex out of range");
      morphism = false;
    }
    if (f.vertex_mult[x] <= 0) fail(vname(s, x), "multiplicity must be positive");
  }
  for (EdgeId e = 0; e < s.num_edges(); ++e) {
    if (f.edge_image[e] < 0 || f.edge_image[e] >= t.num_half_edges()) {
      fail("edge " + s.edge_name(e), "image half-edge out of range");
      morphism = false;
    }
    if (f.edge_mult[e] <= 0) fail("edge " + s.edge_name(e), "multiplicity must be positive");
  }
  if (!morphism) return rep;
  for (HalfEdge h = 0; h < s.num_half_edges(); ++h) {
    if (t.origin(f.image(h)) != f.vertex_image[s.origin(h)]) {
      fail(hname(s, h), "origin does not map to the origin of its image");
      morphism = false;
    }
  }
  if (!morphism) return rep;
  for (VertexId x = 0; x < s.num_vertices(); ++x) {
    const Int& mx = f.vertex_mult[x];
    if (mx <= 0) continue;
    std::map<HalfEdge, int> count;
    for (HalfEdge h : s.half_edges_at(x)) {
      HalfEdge e = f.image(h);
      ++count[e];
      Int k = gcd(mx, t.label(e));
      if (s.label(h) != t.label(e) / k) {
        fail(hname(s, h), "label " + to_string(s.label(h)) + " should be " + to_string(Int(t.label(e) / k)));
      }
      if (f.edge_mult[edge_of(h)] != mx / k) {
        fail(hname(s, h), "edge multiplicity " + to_string(f.edge_mult[edge_of(h)]) + " should be " + to_string(Int(mx / k)));
      }
    }
    for (HalfEdge e : t.half_edges_at(f.vertex_image[x])) {
      Int k = gcd(mx, t.label(e));
      int c = count.count(e) ? count[e] : 0;
      if (Int(c) > k || (exact && Int(c) != k)) {
        fail(vname(s, x), std::to_string(c) + " half-edges over " + hname(t, e) + (exact ? ", need exactly " : ", allowed ") +
                              to_string(k));
      }
    }
  }
  return rep;
}

}  // namespace

WadmReport check_weakly_admissible(const WeaklyAdmissibleMap& f) { return check(f, false); }
WadmReport check_admissible(const WeaklyAdmissibleMap& f) { return check(f, true); }

WeaklyAdmissibleMap derive_map(LabelledGraph source, const LabelledGraph& target,
                               const std::vector<VertexId>& vertex_image, const std::vector<HalfEdge>& edge_image,
                               const std::vector<Int>& vertex_mult) {
  WeaklyAdmissibleMap f;
  f.vertex_image = vertex_image;
  f.edge_image = edge_image;
  f.vertex_mult = vertex_mult;
  for (EdgeId e = 0; e < source.num_edges(); ++e) {
    for (int side = 0; side < 2; ++side) {
      HalfEdge h = 2 * e + side;
      HalfEdge img = side == 0 ? edge_image[e] : reverse(edge_image[e]);
      Int k = gcd(vertex_mult[source.origin(h)], target.label(img));
      source.set_label(h, target.label(img) / k);
      if (side == 0) f.edge_mult.push_back(vertex_mult[source.origin(h)] / k);
    }
  }
  f.source = std::move(source);
  f.target = target;
  return f;
}

Json violation_to_json(const Violation& v) { return Json{{"location", v.location}, {"message", v.message}}; }

Json wadm_to_json(const WeaklyAdmissibleMap& f) {
  Json vertices = Json::array();
  for (VertexId x = 0; x < f.source.num_vertices(); ++x) {
    vertices.push_back({{"vertex", f.source.vertex_name(x)},
                        {"image", f.target.vertex_name(f.vertex_image[x])},
                        {"multiplicity", int_to_json(f.vertex_mult[x])}});
  }
  Json edges = Json::array();
  for (EdgeId e = 0; e < f.source.num_edges(); ++e) {
    HalfEdge img = f.edge_image[e];
    edges.push_back({{"edge", f.source.edge_name(e)},
                     {"image", f.target.edge_name(edge_of(img))},
                     {"reversed", img % 2 == 1},
                     {"multiplicity", int_to_json(f.edge_mult[e])}});
  }
  return Json{{"source", graph_to_json(f.source)}, {"target", graph_to_json(f.target)}, {"vertices", vertices}, {"edges", edges}};
}

WeaklyAdmissibleMap wadm_from_json(const Json& j) {
  try {
    WeaklyAdmissibleMap f;
    f.source = graph_from_json(j.at("source"));
    f.target = graph_from_json(j.at("target"));
    const Json& vs = j.at("vertices");
    const Json& es = j.at("edges");
    if (static_cast<int>(vs.size()) != f.source.num_vertices() || static_cast<int>(es.size()) != f.source.num_edges()) {
      throw InputError("map tables do not match the source graph");
    }
    for (const auto& v : vs) {
      VertexId x = f.source.find_vertex(v.at("vertex").get<std::string>());
      if (x != static_cast<VertexId>(f.vertex_image.size())) throw InputError("vertex table out of order");
      f.vertex_image.push_back(f.target.find_vertex(v.at("image").get<std::string>()));
      f.vertex_mult.push_back(int_from_json(v.at("multiplicity")));
    }
    for (const auto& e : es) {
      EdgeId id = f.source.find_edge(e.at("edge").get<std::string>());
      if (id != static_cast<EdgeId>(f.edge_image.size())) throw InputError("edge table out of order");
      EdgeId img = f.target.find_edge(e.at("image").get<std::string>());
      f.edge_image.push_back(img < 0 ? -1 : 2 * img + (e.at("reversed").get<bool>() ? 1 : 0));
      f.edge_mult.push_back(int_from_json(e.at("multiplicity")));
    }
    return f;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed map: ") + e.what());
  }
}

}  // namespace gbs
