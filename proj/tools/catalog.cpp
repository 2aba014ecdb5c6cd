#include "catalog.hpp"

#include <chrono>
#include <future>

#include "gbs/bs_arith.hpp"
#include "gbs/embed_constructions.hpp"
#include "gbs/embeddings.hpp"
#include "gbs/graph_io.hpp"
#include "gbs/hom_constructions.hpp"
#include "gbs/hom_io.hpp"
#include "gbs/letters.hpp"
#include "gbs/modular.hpp"
#include "gbs/plateau.hpp"
#include "gbs/quotients.hpp"
#include "gbs/shape.hpp"
#include "gbs/word.hpp"

namespace gbs::cli {

namespace {

// Collects mismatches; an entry passes when nothing was recorded.
class Expect {
 public:
  void that(bool ok, const std::string& what) {
    if (!ok) fails_ += (fails_.empty() ? "" : "; ") + what;
  }
  std::string result() const { return fails_; }

 private:
  std::string fails_;
};

LabelledGraph ptit(const Int& q, const Int& r, const Int& x, const Int& y) { return lollipop_graph({q}, {r}, {x}, {y}); }
LabelledGraph bil(const Int& alpha, const Int& beta, const Int& gamma) {
  return circle_graph({2 * beta, gamma}, {Int(2), 2 * alpha});
}
LabelledGraph hop_example() { return parse_graph_text("vertex a\nvertex b\nedge e a b 3 3\nedge t b a 2 4\n"); }

bool certified_epi(HomCertificate c) {
  if (!c.has_witnesses()) find_witnesses(c);
  return check_hom(c) && c.has_witnesses() && check_epi(c);
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> e;
  e.push_back({"hopfian-table", "Hopficity of BS(2,3), BS(2,4), BS(1,n), BS(4,6), BS(6,10)", [] {
                 Expect x;
                 x.that(!is_hopfian_bs(2, 3), "(2,3)");
                 x.that(is_hopfian_bs(2, 4), "(2,4)");
                 x.that(is_hopfian_bs(1, 7), "(1,7)");
                 x.that(!is_hopfian_bs(4, 6), "(4,6)");
                 x.that(!is_hopfian_bs(6, 10), "(6,10)");
                 return x.result();
               }});
  e.push_back({"hopf", "non-Hopfian endomorphism of BS(2,3): a -> a^2, t -> t", [] {
                 Expect x;
                 NonHopfResult nh = non_hopf_endo(2, 3);
                 LabelledGraph g = bs_graph(2, 3);
                 x.that(certified_epi(nh.phi), "phi is not a certified epimorphism");
                 x.that(!is_trivial(g, nh.kernel_witness), "kernel witness is trivial");
                 x.that(is_trivial(g, image_of_word(nh.phi, nh.kernel_witness)), "image of the witness is nontrivial");
                 return x.result();
               }});
  e.push_back({"bs-epi", "epimorphisms between BS groups", [] {
                 Expect x;
                 x.that(exists_epi_bs(18, 36, 9, 18), "(18,36) onto (9,18)");
                 x.that(exists_epi_bs(6, 10, 3, 5), "(6,10) onto (3,5)");
                 x.that(exists_epi_bs(4, 4, 1, -1), "(4,4) onto K");
                 x.that(!exists_epi_bs(3, 3, 1, -1), "(3,3) onto K");
                 return x.result();
               }});
  e.push_back({"bs-embeds", "BS(12,20) in BS(6,10), BS(4,9) in BS(2,3), BS(4,4) in BS(2,2)", [] {
                 Expect x;
                 Decision d = embeds_bs(12, 20, 6, 10);
                 x.that(!d.answer && d.reason == "condition 2: p=2, alpha=1", "(12,20): " + d.reason);
                 x.that(embeds_bs(4, 9, 2, 3).answer, "(4,9)");
                 x.that(!embeds_bs(4, 4, 2, 2).answer, "(4,4)");
                 for (int r = -12; r <= 12; ++r) {
                   for (int s = -12; s <= 12; ++s) {
                     if (r == 0 || s == 0 || abs_int(Int(r)) == abs_int(Int(s))) continue;
                     x.that(!embeds_bs(r, s, 3, 3).answer, "BS(3,3) contains BS(" + std::to_string(r) + "," + std::to_string(s) + ")");
                   }
                 }
                 return x.result();
               }});
  e.push_back({"bs-elementary", "Z^2 in BS(1,2) and K in BS(3,-3)", [] {
                 Expect x;
                 x.that(!embeds_elementary(Elementary::Z2, 1, 2), "Z^2 in BS(1,2)");
                 x.that(embeds_elementary(Elementary::K, 3, -3), "K in BS(3,-3)");
                 return x.result();
               }});
  e.push_back({"rf", "residual finiteness of BS(2,4), BS(1,6), BS(5,-5), BS(2,2), BS(2,3)", [] {
                 Expect x;
                 x.that(!is_rf_bs(2, 4), "(2,4)");
                 x.that(is_rf_bs(1, 6), "(1,6)");
                 x.that(is_rf_bs(5, -5), "(5,-5)");
                 x.that(is_rf_bs(2, 2), "(2,2)");
                 x.that(!is_rf_bs(2, 3), "(2,3)");
                 return x.result();
               }});
  e.push_back({"shape-ptit", "lollipop with one segment edge and a loop", [] {
                 Shape s = classify_shape(ptit(6, 2, 3, 6));
                 bool ok = s.kind == Shape::Lollipop && s.k == 1 && s.l == 1 && s.q == std::vector<Int>{6} &&
                           s.r == std::vector<Int>{2} && s.x == std::vector<Int>{3} && s.y == std::vector<Int>{6};
                 return ok ? std::string() : "got " + shape_to_string(s);
               }});
  e.push_back({"shape-bil", "circle x=[2beta,gamma], y=[2,2alpha] has X=2beta gamma, Y=4alpha", [] {
                 QRXY p = qrxy(classify_shape(bil(3, 2, 5)));
                 return p.X == 20 && p.Y == 12 ? std::string() : "X=" + to_string(p.X) + " Y=" + to_string(p.Y);
               }});
  e.push_back({"rank-gn", "G_N family has rank 2", [] {
                 Expect x;
                 for (unsigned n = 1; n <= 5; ++n) {
                   x.that(mu(ptit(6, ipow(2, n), 3, 6)).rank == 2, "N=" + std::to_string(n));
                 }
                 return x.result();
               }});
  e.push_back({"rank-bil", "circle family is 2-generated iff gamma is odd", [] {
                 Expect x;
                 x.that(!is_two_generated(bil(1, 1, 2)).two_generated, "gamma=2");
                 x.that(is_two_generated(bil(1, 1, 3)).two_generated, "gamma=3");
                 return x.result();
               }});
  e.push_back({"word-relator", "a^Q b^-R is trivial in the lollipop group", [] {
                 LabelledGraph g = ptit(6, 4, 3, 5);
                 GBSWord w = parse_word(g, spanning_tree(g, 0), "a(v0)^6 a(w0)^-4");
                 return is_trivial(g, w) ? std::string() : "relator does not reduce";
               }});
  e.push_back({"word-modulus", "modulus of t in BS(m,n) is m/n, elliptic words have modulus 1", [] {
                 Expect x;
                 LabelledGraph g = bs_graph(4, 6);
                 SpanningTree t = spanning_tree(g, 0);
                 x.that(modulus(g, parse_word(g, t, "t(t)")) == make_rational(4, 6), "modulus of t");
                 x.that(modulus(g, parse_word(g, t, "t(t) a(a)^4 t(t)^-1")) == 1, "elliptic modulus");
                 return x.result();
               }});
  e.push_back({"modular-example", "<a,b,t | a^2=b^2, tbt^-1=b^-1> has modular image <-1>", [] {
                 LabelledGraph g = parse_graph_text("vertex a\nvertex b\nedge e a b 2 2\nedge t b b 1 -1\n");
                 RationalMultGroup m = modular_image(g);
                 bool ok = m.contains_minus_one() && m.rank() == 0 && is_unimodular(g);
                 return ok ? std::string() : "got " + m.to_string();
               }});
  e.push_back({"quot-gn", "G_N is a quotient of BS(18,36) with minimal source (18,36)", [] {
                 Expect x;
                 for (unsigned n = 1; n <= 3; ++n) {
                   LabelledGraph g = ptit(6, ipow(2, n), 3, 6);
                   x.that(is_quotient_of_bs(g, 18, 36).answer, "N=" + std::to_string(n) + " decider");
                   x.that(certified_epi(quotient_certificate(g, 18, 36)), "N=" + std::to_string(n) + " certificate");
                   MinimalSource ms = minimal_bs_source(g);
                   x.that(same_bs_params(ms.m, ms.n, 18, 36), "minimal source");
                 }
                 return x.result();
               }});
  e.push_back({"quot-debs", "<a,b | a^2=b^3> is a quotient of BS(m,m) iff 2|m or 3|m", [] {
                 Expect x;
                 LabelledGraph g = segment_graph({Int(2)}, {Int(3)});
                 for (int m = 1; m <= 30; ++m) {
                   bool want = m % 2 == 0 || m % 3 == 0;
                   x.that(is_quotient_of_bs(g, m, m).answer == want, "m=" + std::to_string(m));
                 }
                 return x.result();
               }});
  e.push_back({"quot-hop", "<a,b,t | a^3=b^3, tb^2t^-1=a^4> onto BS(4,2), BS(6,3), not BS(12,6)", [] {
                 Expect x;
                 LabelledGraph g = hop_example();
                 x.that(certified_epi(hom_from_strings(g, 0, bs_graph(4, 2), 0, {"a(a)", "a(a)", "t(t)^-1"}, "catalog")),
                        "BS(4,2)");
                 x.that(certified_epi(hom_from_strings(g, 0, bs_graph(6, 3), 0, {"a(a)", "t(t) a(a)^2 t(t)^-1", "t(t)^-1"},
                                                       "catalog")),
                        "BS(6,3)");
                 MinimalSource ms = minimal_bs_source(g);
                 x.that(same_bs_params(ms.m, ms.n, 12, 6), "minimal source");
                 x.that(!maps_onto_minimal_bs(g).answer, "maps onto the minimal source");
                 return x.result();
               }});
  e.push_back({"quot-bil", "circle family epi-equivalent to BS(2beta gamma, 4alpha) iff gamma and alpha coprime", [] {
                 Expect x;
                 auto p = epi_equivalent_bs(bil(2, 1, 3));
                 x.that(p && same_bs_params(p->m, p->n, 6, 8), "alpha=2 beta=1 gamma=3");
                 x.that(!epi_equivalent_bs(bil(3, 1, 3)).has_value(), "alpha=3 gamma=3");
                 return x.result();
               }});
  e.push_back({"quot-finite", "finitely many quotients of BS(2,4) but not BS(4,6)", [] {
                 Expect x;
                 x.that(finitely_many_quotients(2, 4).answer, "(2,4)");
                 x.that(!finitely_many_quotients(4, 6).answer, "(4,6)");
                 return x.result();
               }});
  e.push_back({"quot-family", "BS(4,6) family G_N = <a,b,t | a^2 = b^(3^N), t b^2 t^-1 = b^3>", [] {
                 Expect x;
                 Family f = infinite_family(4, 6, 3);
                 x.that(f.kind == "G_N", "kind " + f.kind);
                 for (const auto& m : f.members) {
                   x.that(certified_epi(m.certificate), "N=" + std::to_string(m.N));
                   Shape s = classify_shape(m.graph);
                   x.that(s.kind == Shape::Lollipop && s.q[0] == 2 && s.r[0] == ipow(3, m.N), "shape N=" + std::to_string(m.N));
                 }
                 return x.result();
               }});
  e.push_back({"quot-chain", "descending chain of quotients of BS(18,36)", [] {
                 Expect x;
                 for (int n = 1; n <= 3; ++n) {
                   ChainLink l = descending_chain(n);
                   x.that(certified_epi(l.from_source), "source n=" + std::to_string(n));
                   x.that(certified_epi(l.to_next), "step n=" + std::to_string(n));
                   x.that(check_hom(l.to_target), "target n=" + std::to_string(n));
                 }
                 return x.result();
               }});
  e.push_back({"quot-trees", "tree groups have no non-elementary BS quotient", [] {
                 BSQuotientReport r = exists_bs_quotient(segment_graph({Int(2), Int(3)}, {Int(5), Int(7)}));
                 return r.exists ? "tree reported a BS quotient" : "";
               }});
  e.push_back({"embed-simp", "circle of x+y edges over BS(m, Delta m) is weakly admissible", [] {
                 Expect x;
                 WeaklyAdmissibleMap f = simp_map(3, 2, 2, 3, false);
                 x.that(check_weakly_admissible(f).ok, "checker");
                 x.that(loop_labels(reduce(f.source).first).has_value(), "reduces to a loop");
                 f.vertex_mult[0] += 1;
                 x.that(!check_weakly_admissible(f).ok, "altered multiplicity accepted");
                 return x.result();
               }});
  e.push_back({"embed-trg", "three-block circle gives BS(6,35) in the circle x=[2,3], y=[5,7]", [] {
                 EmbeddingCertificate c = circle_bs_subgroup(circle_graph({Int(2), Int(3)}, {Int(5), Int(7)}), 6, 35);
                 auto l = loop_labels(replay(c.core.source, c.source_trace));
                 bool ok = check_weakly_admissible(c.core).ok && l && same_bs_params(l->first, l->second, 6, 35);
                 return ok ? std::string() : "certificate fails";
               }});
  e.push_back({"embed-construct", "certificates for BS(4,9) in BS(2,3) and BS(4,8) in BS(2,4)", [] {
                 Expect x;
                 x.that(verify_embedding(embed_bs_construct(4, 9, 2, 3)).ok, "(4,9)");
                 x.that(verify_embedding(embed_bs_construct(4, 8, 2, 4)).ok, "(4,8)");
                 x.that(embed_bs_construct(2, 2, 2, 2).route == "identity", "(2,2)");
                 return x.result();
               }});
  e.push_back({"embed-contains", "BS(2,3) contains BS(4,9); BS(3,3) does not contain BS(2,3)", [] {
                 Expect x;
                 x.that(contains_bs(bs_graph(2, 3), 4, 9), "(4,9)");
                 x.that(!contains_bs(bs_graph(3, 3), 2, 3), "(2,3)");
                 return x.result();
               }});
  e.push_back({"embed-bsnn", "one vertex with four labels n is a subgroup of BS(n,n)", [] {
                 Expect x;
                 LabelledGraph g = parse_graph_text("vertex v\nedge s v v 6 6\nedge t v v 6 6\n");
                 x.that(subgroup_of_bs_nn(g, 6), "n=6");
                 auto n = embeds_in_some_bs_nn(g);
                 x.that(n && *n == 6, "least n");
                 return x.result();
               }});
  e.push_back({"embed-elementary", "BS(1,5) has no Z^2; BS(4,-4) contains K", [] {
                 Expect x;
                 x.that(!contains_z2_k(bs_graph(1, 5)).z2, "BS(1,5)");
                 x.that(contains_z2_k(bs_graph(4, -4)).k.answer, "BS(4,-4)");
                 return x.result();
               }});
  return e;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

std::vector<CatalogResult> run_catalog(const std::string& only) {
  std::vector<std::future<CatalogResult>> jobs;
  for (const auto& entry : catalog_entries()) {
    if (entry.id.rfind(only, 0) != 0) continue;
    jobs.push_back(std::async(std::launch::async, [&entry] {
      CatalogResult r{entry.id, entry.description, false, "", 0};
      auto start = std::chrono::steady_clock::now();
      try {
        r.detail = entry.check();
        r.passed = r.detail.empty();
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return r;
    }));
  }
  std::vector<CatalogResult> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

Json catalog_to_json(const std::vector<CatalogResult>& results) {
  Json a = Json::array();
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    a.push_back({{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
  }
  return Json{{"entries", a}, {"passed", passed}, {"total", results.size()}};
}

}  // namespace gbs::cli
