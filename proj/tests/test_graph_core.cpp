#include <doctest.h>

#include <random>

#include "gbs/errors.hpp"
#include "gbs/graph_io.hpp"
#include "gbs/moves.hpp"
#include "gbs/shape.hpp"
#include "support.hpp"

using namespace gbs;

namespace {

std::vector<Int> labels_at(const LabelledGraph& g, VertexId v) {
  std::vector<Int> out;
  for (HalfEdge h : g.half_edges_at(v)) out.push_back(g.label(h));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("betti number") {
  CHECK(betti(bs_graph(2, 3)) == 1);
  CHECK(betti(segment_graph({Int(2), Int(3)}, {Int(5), Int(7)})) == 0);
  CHECK(betti(lollipop_graph({Int(6)}, {Int(2)}, {Int(3)}, {Int(6)})) == 1);
}

TEST_CASE("shape classification") {
  Shape bs = classify_shape(bs_graph(2, 3));
  CHECK(bs.kind == Shape::Circle);
  CHECK(bs.l == 1);
  CHECK(bs.x == std::vector<Int>{2});
  CHECK(bs.y == std::vector<Int>{3});
  Shape seg = classify_shape(segment_graph({Int(2)}, {Int(3)}));
  CHECK(seg.kind == Shape::Segment);
  CHECK(seg.k == 1);
  Shape lol = classify_shape(lollipop_graph({Int(6)}, {Int(4)}, {Int(3)}, {Int(5)}));
  CHECK(lol.kind == Shape::Lollipop);
  CHECK(lol.q == std::vector<Int>{6});
  CHECK(lol.r == std::vector<Int>{4});
  CHECK(lol.x == std::vector<Int>{3});
  CHECK(lol.y == std::vector<Int>{5});
  QRXY p = qrxy(lol);
  CHECK(p.Q == 6);
  CHECK(p.X == 3);
  QRXY c = qrxy(bs);
  CHECK((c.Q == 1 && c.R == 1 && c.X == 2 && c.Y == 3));
  QRXY s = qrxy(seg);
  CHECK((s.Q == 2 && s.R == 3 && !s.has_xy));
  QRXY b = qrxy(classify_shape(circle_graph({Int(2), Int(5)}, {Int(2), Int(6)})));
  CHECK(b.X == 10);
  CHECK(b.Y == 12);
  LabelledGraph star = parse_graph_text("vertex c\nvertex a\nvertex b\nvertex d\nedge x c a 2 3\nedge y c b 2 3\nedge z c d 2 3\n");
  CHECK(classify_shape(star).kind == Shape::Other);
}

TEST_CASE("reduced graphs") {
  CHECK(is_reduced(bs_graph(1, 2)));
  CHECK_FALSE(is_reduced(segment_graph({Int(1)}, {Int(5)})));
  CHECK_FALSE(is_reduced(circle_graph({Int(2), Int(1)}, {Int(1), Int(3)})));
}

TEST_CASE("collapse") {
  LabelledGraph g = parse_graph_text("vertex v\nvertex w\nedge e v w 4 1\nedge f w w 3 5\n");
  MoveResult r = collapse(g, 0);
  CHECK(r.graph.num_vertices() == 1);
  CHECK(labels_at(r.graph, 0) == std::vector<Int>{12, 20});
  LabelledGraph iso = parse_graph_text("vertex v\nvertex w\nedge e v w 1 1\n");
  MoveResult r2 = collapse(iso, 0);
  CHECK(r2.graph.num_vertices() == 1);
  CHECK(r2.graph.num_edges() == 0);
  CHECK_THROWS_AS(collapse(bs_graph(2, 3), 0), InputError);
}

TEST_CASE("reduce") {
  auto [same, none] = reduce(bs_graph(2, 3));
  CHECK(same == bs_graph(2, 3));
  CHECK(none.empty());
  LabelledGraph c = circle_graph({Int(2), Int(1), Int(1)}, {Int(1), Int(1), Int(3)});
  auto [red, trace] = reduce(c);
  REQUIRE(red.num_vertices() == 1);
  REQUIRE(red.num_edges() == 1);
  CHECK(abs_int(red.label(0) * red.label(1)) == 6);
  CHECK(replay(c, trace) == red);
}

TEST_CASE("sign changes") {
  MoveResult e = sign_change_edge(bs_graph(2, 3), 0);
  CHECK(e.graph == bs_graph(-2, -3));
  CHECK(sign_change_edge(e.graph, 0).graph == bs_graph(2, 3));
  LabelledGraph seg = segment_graph({Int(2)}, {Int(3)});
  MoveResult v = sign_change_vertex(seg, 0);
  CHECK(v.graph.label(0) == -2);
  CHECK(v.graph.label(1) == 3);
}

TEST_CASE("contraction move") {
  LabelledGraph g = parse_graph_text("vertex v\nvertex w\nvertex x\nvertex y\nedge e v w 6 10\nedge f v x 5 7\nedge h w y 11 13\n");
  MoveResult r = contraction_move(g, 0);
  CHECK(r.graph.num_vertices() == 3);
  bool found = false;
  for (HalfEdge h = 0; h < r.graph.num_half_edges(); ++h) found = found || r.graph.label(h) == 25;
  CHECK(found);
  LabelledGraph unit = parse_graph_text("vertex v\nvertex w\nedge e v w 4 1\nedge f w w 3 5\n");
  CHECK(contraction_move(unit, 0).graph == collapse(unit, 0).graph);
}

TEST_CASE("displacement move") {
  LabelledGraph g = parse_graph_text("vertex v\nvertex w\nvertex a\nedge e v w 5 6\nedge f v a 7 11\n");
  MoveResult r = displacement_move(g, 0, 2);
  CHECK(r.graph.label(0) == 5);
  CHECK(r.graph.label(1) == 3);
  CHECK(r.graph.label(2) == 14);
  CHECK(displacement_move(g, 0, 1).graph == g);
}

TEST_CASE("expansion then collapse restores the graph") {
  LabelledGraph g = parse_graph_text("vertex v\nedge s v v 6 6\nedge t v v 6 6\n");
  MoveResult ex = expansion(g, 0, {0, 2}, 3);
  CHECK(ex.graph.num_vertices() == 2);
  auto [back, trace] = reduce(ex.graph);
  CHECK(labels_at(back, 0) == labels_at(g, 0));
}

TEST_CASE("standard presentation") {
  LabelledGraph g = bs_graph(2, 3);
  Presentation p = standard_presentation(g, spanning_tree(g, 0));
  CHECK(p.generators.size() == 2);
  REQUIRE(p.relators.size() == 1);
  CHECK(letters_to_string(g, p, p.relators[0]) == "t(t) a(a)^2 t(t)^-1 a(a)^-3");
  LabelledGraph l = lollipop_graph({Int(6)}, {Int(4)}, {Int(3)}, {Int(5)});
  Presentation pl = standard_presentation(l, spanning_tree(l, 0));
  CHECK(pl.generators.size() == 3);
  CHECK(pl.relators.size() == 2);
}

TEST_CASE("graph text and JSON") {
  LabelledGraph g = parse_graph_text("# comment\nvertex a\nvertex b\nedge e a b 2 3\nedge t b b 4 -6\n");
  CHECK(parse_graph_text(graph_to_text(g)) == g);
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(parse_graph_text("segment 2 3") == segment_graph({Int(2)}, {Int(3)}));
  try {
    parse_graph_text("vertex a\nedge e a b 2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph_text("vertex a\nedge e a a 0 3\n"), InputError);
  CHECK_THROWS_AS(parse_graph_text("vertex a\nvertex b\n"), InputError);
}

TEST_CASE("reduce yields a reduced graph and its trace replays") {
  std::mt19937 rng(7);
  for (int i = 0; i < 300; ++i) {
    LabelledGraph g = testing::random_graph(rng, 1 + rng() % 6, rng() % 3, 4);
    auto [red, trace] = reduce(g);
    CHECK(is_reduced(red));
    CHECK(betti(red) == betti(g));
    CHECK(replay(g, trace) == red);
    auto [canon, signs] = canonicalize(red);
    CHECK(replay(red, signs) == canon);
  }
}
