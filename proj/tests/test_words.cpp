#include <doctest.h>

#include <random>

#include "gbs/errors.hpp"
#include "gbs/graph_io.hpp"
#include "gbs/letters.hpp"
#include "gbs/modular.hpp"
#include "gbs/shape.hpp"
#include "gbs/word.hpp"
#include "support.hpp"

using namespace gbs;

namespace {

GBSWord word(const LabelledGraph& g, const std::string& text) {
  return parse_word(g, spanning_tree(g, 0), text);
}

LabelledGraph example_graph() {
  return parse_graph_text("vertex v\nvertex w\nedge e v w 2 2\nedge t w w 1 -1\n");
}

}  // namespace

TEST_CASE("Britton reduction examples") {
  LabelledGraph g = bs_graph(2, 3);
  CHECK(is_trivial(g, word(g, "t(t) a(a)^2 t(t)^-1 a(a)^-3")));
  CHECK_FALSE(is_trivial(g, word(g, "t(t) a(a) t(t)^-1 a(a)^-1")));
  CHECK(is_trivial(g, word(g, "a(a)^4 a(a)^-4")));
  CHECK(equal(g, word(g, "t(t) a(a)^4 t(t)^-1"), word(g, "a(a)^6")));
  CHECK_FALSE(equal(g, word(g, "t(t)"), word(g, "a(a)")));
  CHECK_THROWS_AS(word(g, "b(a)"), ParseError);
}

TEST_CASE("ellipticity") {
  LabelledGraph g = bs_graph(2, 3);
  CHECK(is_elliptic(g, word(g, "a(a)^5")));
  CHECK_FALSE(is_elliptic(g, word(g, "t(t)")));
  CHECK(is_elliptic(g, word(g, "t(t) a(a) t(t)^-1")));
}

TEST_CASE("modulus") {
  LabelledGraph g = bs_graph(2, 3);
  CHECK(modulus(g, word(g, "t(t)")) == Rational(2, 3));
  CHECK(modulus(g, word(g, "t(t)^-2 a(a)")) == Rational(9, 4));
  CHECK(modulus(g, word(g, "a(a)^7")) == 1);
  LabelledGraph l = lollipop_graph({Int(6)}, {Int(4)}, {Int(3)}, {Int(5)});
  std::vector<Rational> m = loop_moduli(l);
  REQUIRE(m.size() == 1);
  CHECK((m[0] == Rational(3, 5) || m[0] == Rational(5, 3)));
}

TEST_CASE("modular image") {
  CHECK(modular_image(segment_graph({Int(2), Int(4)}, {Int(3), Int(5)})).is_trivial());
  RationalMultGroup bs24 = modular_image(bs_graph(2, 4));
  CHECK(bs24.contains(Rational(1, 2)));
  CHECK_FALSE(bs24.contains(Rational(-1)));
  LabelledGraph ex = example_graph();
  CHECK(modular_image(ex).contains(Rational(-1)));
  CHECK(is_unimodular(ex));
  CHECK(is_unimodular(bs_graph(3, 3)));
  CHECK(has_nontrivial_center(bs_graph(3, 3)));
  CHECK_FALSE(is_unimodular(bs_graph(2, 4)));
  CHECK_FALSE(has_nontrivial_center(bs_graph(2, 4)));
  CHECK(is_unimodular(bs_graph(2, -2)));
  CHECK_FALSE(has_nontrivial_center(bs_graph(2, -2)));
}

TEST_CASE("segment center index examples") {
  CHECK(testing::center_index_oracle(4, {Int(6)}, {Int(5)}) == 3);
  CHECK(segment_center_index(4, {Int(6)}, {Int(5)}) == 3);
  CHECK(segment_center_index(1, {Int(6)}, {Int(5)}) == 6);
  CHECK(segment_center_index(1, {Int(3), Int(5)}, {Int(7), Int(11)}) == 15);
  CHECK(segment_center_index(1, {Int(4), Int(12)}, {Int(4), Int(20)}) % 4 == 0);
  CHECK(segment_center_index(1, {Int(4), Int(12)}, {Int(4), Int(20)}) % 8 != 0);
  CHECK_THROWS_AS(segment_center_index(0, {Int(2)}, {Int(3)}), InputError);
}

TEST_CASE("segment center index matches the divisibility chain") {
  std::mt19937 rng(17);
  for (int i = 0; i < 300; ++i) {
    int k = 1 + rng() % 4;
    std::vector<Int> q = testing::random_labels(rng, k, 20);
    std::vector<Int> r = testing::random_labels(rng, k, 20);
    Int r0 = testing::random_label(rng, 20);
    CHECK(segment_center_index(r0, q, r) == testing::center_index_oracle(r0, q, r));
  }
}

TEST_CASE("conjugated relators are trivial") {
  std::mt19937 rng(19);
  for (int i = 0; i < 150; ++i) {
    LabelledGraph g = testing::random_graph(rng, 1 + rng() % 4, 1 + rng() % 2, 6);
    SpanningTree t = spanning_tree(g, 0);
    Presentation p = standard_presentation(g, t);
    GBSWord acc = GBSWord::identity(0);
    for (int j = 0; j < 3; ++j) {
      GBSWord rel = letters_to_word(g, t, p, p.relators[rng() % p.relators.size()]);
      if (rng() & 1) rel = inverse(rel);
      GBSWord c = testing::random_word(rng, g, t, 0, 4, 3);
      acc = concat(acc, concat(c, concat(rel, inverse(c))));
    }
    CHECK(is_trivial(g, acc));
    CHECK(britton_reduce_random_order(g, acc, rng()).trivial);
  }
}

TEST_CASE("reduction order does not change triviality") {
  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    LabelledGraph g = testing::random_graph(rng, 1 + rng() % 3, 1 + rng() % 2, 4);
    SpanningTree t = spanning_tree(g, 0);
    GBSWord w = testing::random_word(rng, g, t, 0, 6, 4);
    NormalForm a = britton_reduce(g, w);
    NormalForm b = britton_reduce_random_order(g, w, rng());
    CHECK(a.trivial == b.trivial);
    CHECK(a.word.traversals() == b.word.traversals());
  }
}

TEST_CASE("modulus is multiplicative and trivial on elliptic words") {
  std::mt19937 rng(29);
  for (int i = 0; i < 300; ++i) {
    LabelledGraph g = testing::random_graph(rng, 1 + rng() % 3, 1 + rng() % 2, 6);
    SpanningTree t = spanning_tree(g, 0);
    GBSWord a = testing::random_word(rng, g, t, 0, 5, 3);
    GBSWord b = testing::random_word(rng, g, t, 0, 5, 3);
    CHECK(modulus(g, concat(a, b)) == modulus(g, a) * modulus(g, b));
    if (is_elliptic(g, a)) CHECK(modulus(g, a) == 1);
  }
}

TEST_CASE("a_0 and a_j powers agree along a segment") {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    int k = 1 + rng() % 3;
    std::vector<Int> q = testing::random_labels(rng, k, 6);
    std::vector<Int> r = testing::random_labels(rng, k, 6);
    LabelledGraph g = segment_graph(q, r);
    SpanningTree t = spanning_tree(g, 0);
    Int qp = 1, rp = 1;
    for (int j = 0; j < k; ++j) {
      qp *= q[j];
      rp *= r[j];
    }
    GBSWord lhs = GBSWord::vertex_power(0, qp);
    GBSWord rhs = vertex_generator_word(g, t, k, rp);
    CHECK(equal(g, lhs, rhs));
  }
}
