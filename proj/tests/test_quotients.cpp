#include <doctest.h>

#include "gbs/errors.hpp"
#include "gbs/graph_io.hpp"
#include "gbs/hom.hpp"
#include "gbs/hom_constructions.hpp"
#include "gbs/plateau.hpp"
#include "gbs/quotients.hpp"
#include "gbs/shape.hpp"

using namespace gbs;

namespace {

LabelledGraph trefoil() { return segment_graph({Int(2)}, {Int(3)}); }

LabelledGraph ptit(int q, int r, int x, int y) {
  return lollipop_graph({Int(q)}, {Int(r)}, {Int(x)}, {Int(y)});
}

LabelledGraph bil(int alpha, int beta, int gamma) {
  return circle_graph({Int(2 * beta), Int(gamma)}, {Int(2), Int(2 * alpha)});
}

LabelledGraph hop_example() {
  return parse_graph_text("vertex a\nvertex b\nedge e a b 3 3\nedge t b a 2 4\n");
}

bool certified_epi(HomCertificate c) {
  if (!c.has_witnesses()) find_witnesses(c);
  return check_hom(c) && c.has_witnesses() && check_epi(c);
}

}  // namespace

TEST_CASE("BS sources") {
  CHECK(is_quotient_of_bs(trefoil(), 2, 2).answer);
  CHECK_FALSE(is_quotient_of_bs(trefoil(), 5, 5).answer);
  CHECK_FALSE(is_quotient_of_bs(trefoil(), 2, 3).answer);
  LabelledGraph g3 = chain_graph(3);
  CHECK(is_quotient_of_bs(g3, 18, 36).answer);
  CHECK(certified_epi(quotient_certificate(g3, 18, 36)));
  SourceSet s = bs_sources(bs_graph(4, 6));
  CHECK(s.contains(8, 12));
  CHECK(s.contains(6, 4));
  CHECK_FALSE(s.contains(4, 4));
  CHECK_THROWS_AS(bs_sources(bs_graph(1, -1)), InputError);
  CHECK_THROWS_AS(bs_sources(segment_graph({Int(2), Int(3)}, {Int(3), Int(2)})), InputError);
}

TEST_CASE("minimal source") {
  MinimalSource g = minimal_bs_source(chain_graph(1));
  CHECK(g.m == 18);
  CHECK(g.n == 36);
  MinimalSource b = minimal_bs_source(bs_graph(4, 6));
  CHECK(b.m == 4);
  CHECK(b.n == 6);
  CHECK(minimal_bs_source(trefoil()).segment);
  CHECK(minimal_bs_source(ptit(3, 2, 2, 5)).m == 6);
}

TEST_CASE("maps onto the minimal BS group") {
  LabelledGraph hop = hop_example();
  CHECK_FALSE(maps_onto_minimal_bs(hop).answer);
  CHECK(maps_onto_minimal_bs(ptit(3, 2, 2, 5)).answer);
  CHECK(maps_onto_minimal_bs(ptit(4, 2, 2, 3)).answer);
  CHECK(certified_epi(minimal_bs_certificate(ptit(4, 2, 2, 3))));
  CHECK_FALSE(maps_onto_minimal_bs(chain_graph(2)).answer);
  CHECK_THROWS_AS(maps_onto_minimal_bs(trefoil()), InputError);
}

TEST_CASE("epi-equivalence") {
  std::optional<BSPair> bs = epi_equivalent_bs(bs_graph(4, 6));
  REQUIRE(bs.has_value());
  CHECK(bs->m == 4);
  CHECK(bs->n == 6);
  CHECK_FALSE(epi_equivalent_bs(trefoil()).has_value());
  std::optional<BSPair> b = epi_equivalent_bs(bil(2, 1, 3));
  REQUIRE(b.has_value());
  CHECK(abs_int(b->m * b->n) == 2 * 1 * 3 * 4 * 2);
  CHECK_FALSE(epi_equivalent_bs(bil(3, 1, 3)).has_value());
}

TEST_CASE("finitely many quotients") {
  CHECK(finitely_many_quotients(2, 4).answer);
  CHECK(finitely_many_quotients(2, 3).answer);
  CHECK(finitely_many_quotients(3, -3).answer);
  CHECK_FALSE(finitely_many_quotients(4, 6).answer);
  CHECK_FALSE(finitely_many_quotients(6, 6).answer);
  CHECK(finitely_many_quotients(4, 8).reason.find("clause (d)") != std::string::npos);
}

TEST_CASE("rigidity") {
  CHECK(quotient_rigidity(2, 6) == Rigidity::AllNonsolvableIso);
  CHECK(quotient_rigidity(1, 7) == Rigidity::AllNoncyclicIso);
  CHECK(quotient_rigidity(4, 6) == Rigidity::Neither);
}

TEST_CASE("largeness and residual finiteness") {
  CHECK_FALSE(is_large(bs_graph(2, 3)).answer);
  CHECK(is_large(bs_graph(2, 4)).answer);
  CHECK(is_large(trefoil()).answer);
  CHECK_FALSE(is_rf_gbs(bs_graph(2, 4)).answer);
  CHECK(is_rf_gbs(bs_graph(1, 6)).answer);
  CHECK(is_rf_gbs(bs_graph(3, -3)).answer);
  CHECK_FALSE(is_rf_gbs(ptit(6, 2, 3, 6)).answer);
  CHECK(is_rf_gbs(trefoil()).answer);
}

TEST_CASE("elementary groups and BS quotients") {
  CHECK(is_elementary(bs_graph(1, 1)));
  CHECK(is_elementary(bs_graph(1, -1)));
  CHECK(is_elementary(segment_graph({Int(1)}, {Int(7)})));
  CHECK_FALSE(is_elementary(bs_graph(2, 3)));
  CHECK(is_klein_bottle(segment_graph({Int(2)}, {Int(-2)})));
  CHECK_FALSE(exists_bs_quotient(trefoil()).exists);
  BSQuotientReport one = exists_bs_quotient(bs_graph(2, 3));
  CHECK(one.exists);
  CHECK(one.elliptic_friendly);
  LabelledGraph two = parse_graph_text("vertex v\nedge s v v 2 1\nedge t v v 3 1\n");
  BSQuotientReport r = exists_bs_quotient(two);
  CHECK(r.exists);
  CHECK_FALSE(r.elliptic_friendly);
}

TEST_CASE("descending chain") {
  ChainLink link = descending_chain(2);
  CHECK(link.graph == chain_graph(2));
  CHECK(certified_epi(link.from_source));
  CHECK(certified_epi(link.to_next));
  CHECK(certified_epi(link.to_target));
  Shape s = classify(chain_graph(1));
  CHECK(s.kind == Shape::Lollipop);
  CHECK(s.q == std::vector<Int>{6});
  CHECK(s.r == std::vector<Int>{2});
  CHECK(s.x == std::vector<Int>{3});
  CHECK(s.y == std::vector<Int>{6});
}

TEST_CASE("infinite families") {
  Family f = infinite_family(4, 6, 4);
  CHECK(f.kind == "G_N");
  REQUIRE(f.members.size() == 4);
  for (const FamilyMember& m : f.members) CHECK(certified_epi(m.certificate));
  Family h = infinite_family(6, 12, 3);
  CHECK(h.kind == "H_N");
  for (const FamilyMember& m : h.members) CHECK(certified_epi(m.certificate));
  CHECK_THROWS_AS(infinite_family(2, 8, 2), InputError);
  Family seg = infinite_family(6, 6, 3);
  CHECK(seg.kind == "segment");
  for (const FamilyMember& m : seg.members) CHECK(certified_epi(m.certificate));
  CHECK_THROWS_AS(infinite_family(2, 4, 3), InputError);
}
