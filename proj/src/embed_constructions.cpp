#include "gbs/embed_constructions.hpp"

#include "gbs/errors.hpp"
#include "gbs/number_theory.hpp"
#include "gbs/shape.hpp"

namespace gbs {

WeaklyAdmissibleMap circle_cover(const LabelledGraph& target, const std::vector<HalfEdge>& images,
                                 const std::vector<Int>& mults) {
  const int len = static_cast<int>(images.size());
  LabelledGraph src;
  std::vector<VertexId> vimg;
  for (int i = 0; i < len; ++i) {
    src.add_vertex("x" + std::to_string(i));
    vimg.push_back(target.origin(images[i]));
  }
  for (int i = 0; i < len; ++i) src.add_edge("f" + std::to_string(i), i, (i + 1) % len, 1, 1);
  return derive_map(std::move(src), target, vimg, images, mults);
}

WeaklyAdmissibleMap loop_blocks(const LabelledGraph& target, const std::vector<Block>& blocks, const Int& start) {
  std::vector<HalfEdge> images;
  std::vector<Int> mults;
  Rational mu = make_rational(start, 1);
  for (const Block& b : blocks) {
    for (long i = 0; i < b.length; ++i) {
      if (mu.get_den() != 1) throw InternalError("block multiplicity is not an integer");
      images.push_back(b.reversed ? 1 : 0);
      mults.push_back(mu.get_num());
      mu *= b.ratio;
    }
  }
  if (mu != Rational(start)) throw InternalError("block multiplicities do not close up");
  return circle_cover(target, images, mults);
}

WeaklyAdmissibleMap gros_map(const Int& m, const Int& n, long x, long y, long beta, const Int& scale,
                             std::vector<Block>* blocks_out) {
  Rational am = make_rational(abs_int(m), 1), an = make_rational(abs_int(n), 1);
  std::vector<Block> blocks = {
      {x + beta, false, an},      {x + beta, true, am / an}, {y, true, am},
      {x + y + beta, false, an / am}, {x, true, 1 / an},     {y + beta, true, am / an},
      {y + beta, false, 1 / am},
  };
  if (blocks_out) *blocks_out = blocks;
  return loop_blocks(bs_graph(scale * m, scale * n), blocks, abs_int(scale));
}

WeaklyAdmissibleMap simp_map(const Int& m, const Int& delta, long x, long y, bool hair) {
  LabelledGraph target = bs_graph(m, delta * m);
  std::vector<HalfEdge> images(x, 1);
  images.insert(images.end(), y, 0);
  WeaklyAdmissibleMap f = circle_cover(target, images, std::vector<Int>(x + y, abs_int(m)));
  if (!hair) return f;
  LabelledGraph src = f.source;
  VertexId h = src.add_vertex("h");
  src.add_edge("g", 0, h, 1, 1);
  std::vector<VertexId> vimg = f.vertex_image;
  vimg.push_back(0);
  std::vector<HalfEdge> eimg = f.edge_image;
  eimg.push_back(0);
  std::vector<Int> mults = f.vertex_mult;
  mults.push_back(abs_int(delta));
  return derive_map(std::move(src), target, vimg, eimg, mults);
}

WeaklyAdmissibleMap cover_map(const Int& u, const Int& n, long beta) {
  return loop_blocks(bs_graph(u, n), {{beta, false, 1}}, 1);
}

WeaklyAdmissibleMap trg_map(const LabelledGraph& circle) {
  Shape sh = classify_shape(circle);
  if (sh.kind != Shape::Circle) throw InputError("graph is not a circle");
  const int l = sh.l;
  // y[j] holds y_{j+1}, the label of edge j near w_{j+1}.
  auto prod = [](const std::vector<Int>& v, int from, int to) {
    Int p = 1;
    for (int i = from; i < to; ++i) p *= v[i];
    return abs_int(p);
  };
  std::vector<HalfEdge> images;
  std::vector<Int> mults;
  for (int j = 0; j < l; ++j) {
    images.push_back(sh.circ_half_edges[j]);
    mults.push_back(prod(sh.y, 0, j));
  }
  for (int j = l - 1; j >= 0; --j) {
    images.push_back(reverse(sh.circ_half_edges[j]));
    mults.push_back(prod(sh.y, 0, j + 1) * prod(sh.x, j + 1, l));
  }
  for (int j = 0; j < l; ++j) {
    images.push_back(sh.circ_half_edges[j]);
    mults.push_back(prod(sh.x, j, l));
  }
  return circle_cover(circle, images, mults);
}

LabelledGraph amalgam_graph(const Int& nu, const Int& r, const Int& s) {
  LabelledGraph g;
  VertexId a = g.add_vertex("a");
  VertexId b = g.add_vertex("b");
  g.add_edge("u", a, b, nu, 1);
  g.add_edge("t", b, b, r, s);
  return g;
}

WeaklyAdmissibleMap aug1_map(const Int& r, const Int& s, const Int& nu) {
  return derive_map(bs_graph(r, s), amalgam_graph(nu, r, s), {1}, {2}, {1});
}

WeaklyAdmissibleMap add_hair(const WeaklyAdmissibleMap& f, VertexId x, const Int& nu) {
  if (f.target.num_vertices() != 1 || f.target.num_edges() != 1) throw InternalError("hair needs a loop target");
  if (gcd(f.vertex_mult[x], nu) != 1) throw InternalError("hair index is not coprime to the amalgam degree");
  LabelledGraph target = amalgam_graph(nu, f.target.label(0), f.target.label(1));
  LabelledGraph src = f.source;
  VertexId h = src.add_vertex("h" + std::to_string(src.num_vertices()));
  src.add_edge("hair", h, x, 1, 1);
  std::vector<VertexId> vimg(f.vertex_image.size(), 1);
  vimg.push_back(0);
  std::vector<HalfEdge> eimg;
  for (HalfEdge e : f.edge_image) eimg.push_back(e + 2);
  eimg.push_back(0);
  std::vector<Int> mults = f.vertex_mult;
  mults.push_back(f.vertex_mult[x]);
  return derive_map(std::move(src), target, vimg, eimg, mults);
}

}  // namespace gbs
