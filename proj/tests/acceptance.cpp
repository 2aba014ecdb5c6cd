#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gbs/bs_arith.hpp"
#include "gbs/embed_constructions.hpp"
#include "gbs/embeddings.hpp"
#include "gbs/graph_io.hpp"
#include "gbs/hom.hpp"
#include "gbs/hom_constructions.hpp"
#include "gbs/hom_io.hpp"
#include "gbs/letters.hpp"
#include "gbs/moves.hpp"
#include "gbs/plateau.hpp"
#include "gbs/quotients.hpp"
#include "gbs/shape.hpp"
#include "gbs/wadm.hpp"
#include "gbs/word.hpp"
#include "support.hpp"

using namespace gbs;

namespace {

// Every criterion is exact: the required agreement rate is 1 and no
// exceptions are tolerated.
constexpr double kRequiredAgreement = 1.0;
constexpr int kGrid = 12;
constexpr int kCenterSegments = 1000;
constexpr int kMutations = 100;
constexpr int kRelatorProducts = 10000;
constexpr int kModulusPairs = 1000;

struct Outcome {
  bool ok = false;
  std::string detail;
};

class Check {
 public:
  void that(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (first_.empty()) first_ = what;
    }
  }
  int total() const { return total_; }
  int failed() const { return failed_; }
  double agreement() const { return total_ == 0 ? 1.0 : double(total_ - failed_) / total_; }
  Outcome result(const std::string& summary) const {
    std::ostringstream os;
    if (agreement() >= kRequiredAgreement && total_ > 0) {
      os << total_ << " checks, " << summary;
      return {true, os.str()};
    }
    os << failed_ << "/" << total_ << " failed, first: " << first_ << " (" << summary << ")";
    return {false, os.str()};
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::string first_;
};

std::string pair_name(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

bool certified_epi(HomCertificate c) {
  if (!c.has_witnesses()) find_witnesses(c);
  return check_hom(c) && c.has_witnesses() && check_epi(c);
}

std::set<long> prime_set(long n) {
  std::set<long> out;
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.insert(p);
      n /= p;
    }
  }
  if (n > 1) out.insert(n);
  return out;
}

bool prime_long(long n) {
  n = std::labs(n);
  return n > 1 && prime_set(n) == std::set<long>{n};
}

long gcd_long(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool multiple_of(long m, long n, long a, long b) {
  // (m, n) = k (a, b) for some nonzero integer k.
  if (m % a != 0) return false;
  long k = m / a;
  return k != 0 && n == k * b;
}

LabelledGraph ptit(long q, long r, long x, long y) {
  return lollipop_graph({Int(q)}, {Int(r)}, {Int(x)}, {Int(y)});
}

LabelledGraph bil(long alpha, long beta, long gamma) {
  return circle_graph({Int(2 * beta), Int(gamma)}, {Int(2), Int(2 * alpha)});
}

bool reduces_to(const LabelledGraph& g, const Int& a, const Int& b) {
  std::optional<std::pair<Int, Int>> l = loop_labels(reduce(g).first);
  return l && same_bs_params(l->first, l->second, a, b);
}

// Criterion 1: hopficity re-evaluated from prime sets.
Outcome hopficity() {
  Check c;
  c.that(!is_hopfian_bs(2, 3), "(2,3)");
  c.that(is_hopfian_bs(2, 4), "(2,4)");
  for (long n = 1; n <= kGrid; ++n) c.that(is_hopfian_bs(1, n), pair_name(1, n));
  c.that(!is_hopfian_bs(4, 6), "(4,6)");
  c.that(!is_hopfian_bs(6, 10), "(6,10)");
  for (long m = -kGrid; m <= kGrid; ++m) {
    for (long n = -kGrid; n <= kGrid; ++n) {
      if (!m || !n) continue;
      bool oracle = std::labs(m) == 1 || std::labs(n) == 1 || prime_set(m) == prime_set(n);
      c.that(is_hopfian_bs(m, n) == oracle, pair_name(m, n));
    }
  }
  return c.result("table plus signed 12x12 grid");
}

// Criterion 2.
Outcome obstr_catalog() {
  Check c;
  Decision d = embeds_bs(12, 20, 6, 10);
  c.that(!d.answer, "(12,20) in (6,10)");
  c.that(embeds_bs(4, 9, 2, 3).answer, "(4,9) in (2,3)");
  c.that(!embeds_bs(4, 4, 2, 2).answer, "(4,4) in (2,2)");
  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned b = 0; b <= 2; ++b) {
      for (unsigned k = 0; k <= 2; ++k) {
        Int r = ipow(2, a + b) * ipow(3, k), s = ipow(2, b) * ipow(3, a + k);
        if (abs_int(r) == 1 && abs_int(s) == 1) continue;
        c.that(embeds_bs(r, s, 2, 3).answer, "(" + to_string(r) + "," + to_string(s) + ") in (2,3)");
      }
    }
  }
  for (long r = -kGrid; r <= kGrid; ++r) {
    for (long s = -kGrid; s <= kGrid; ++s) {
      if (!r || !s || std::labs(r) == std::labs(s)) continue;
      c.that(!embeds_bs(r, s, 3, 3).answer, pair_name(r, s) + " in (3,3)");
    }
  }
  return c.result("worked examples");
}

struct GridCount {
  int yes = 0;
  int verified = 0;
  std::string first_failure;
};

GridCount construct_row(long m) {
  GridCount out;
  for (long n = -kGrid; n <= kGrid; ++n) {
    if (!n) continue;
    for (long r = -kGrid; r <= kGrid; ++r) {
      for (long s = -kGrid; s <= kGrid; ++s) {
        if (!r || !s || (std::labs(r) == 1 && std::labs(s) == 1)) continue;
        if (!embeds_bs(r, s, m, n).answer) continue;
        ++out.yes;
        bool ok = false;
        try {
          EmbeddingCertificate cert = embed_bs_construct(r, s, m, n);
          ok = check_weakly_admissible(cert.core).ok && reduces_to(cert.core.target, m, n);
          if (cert.prefix) {
            std::optional<std::pair<Int, Int>> mid = loop_labels(reduce(cert.prefix->target).first);
            ok = ok && check_weakly_admissible(*cert.prefix).ok && reduces_to(cert.prefix->source, r, s) && mid &&
                 reduces_to(cert.core.source, mid->first, mid->second);
          } else {
            ok = ok && reduces_to(cert.core.source, r, s);
          }
        } catch (const std::exception&) {
          ok = false;
        }
        if (ok) {
          ++out.verified;
        } else if (out.first_failure.empty()) {
          out.first_failure = pair_name(r, s) + " in " + pair_name(m, n);
        }
      }
    }
  }
  return out;
}

// Criterion 3: m > 0 covers every group, since BS(m, n) = BS(-m, -n).
Outcome construction_grid() {
  std::vector<std::future<GridCount>> rows;
  for (long m = 1; m <= kGrid; ++m) rows.push_back(std::async(std::launch::async, construct_row, m));
  GridCount total;
  for (auto& f : rows) {
    GridCount g = f.get();
    total.yes += g.yes;
    total.verified += g.verified;
    if (total.first_failure.empty()) total.first_failure = g.first_failure;
  }
  std::ostringstream os;
  os << total.verified << "/" << total.yes << " certificates verified";
  double rate = total.yes == 0 ? 0.0 : double(total.verified) / total.yes;
  if (rate >= kRequiredAgreement) return {true, os.str()};
  return {false, os.str() + ", first failure " + total.first_failure};
}

// Criterion 4.
Outcome non_hopfian_pipeline() {
  LabelledGraph g = bs_graph(2, 3);
  SpanningTree t = spanning_tree(g, 0);
  HomCertificate phi = hom_from_strings(g, 0, g, 0, {"a(a)^2", "t(t)"}, "a -> a^2, t -> t");
  GBSWord w = parse_word(g, t, "t(t) a(a) t(t)^-1 a(a) t(t) a(a)^-1 t(t)^-1 a(a)^-1");
  Check c;
  c.that(certified_epi(phi), "phi is not a verified epimorphism");
  c.that(!britton_reduce(g, w).trivial, "commutator reduces to trivial");
  c.that(is_trivial(g, image_of_word(phi, w)), "image of the commutator is nontrivial");
  return c.result("three booleans");
}

// Criterion 5.
Outcome debs_quotients() {
  Check c;
  LabelledGraph trefoil = segment_graph({Int(2)}, {Int(3)});
  for (long m = 1; m <= 30; ++m) {
    bool want = m % 2 == 0 || m % 3 == 0;
    bool got = is_quotient_of_bs(trefoil, m, m).answer;
    c.that(got == want, "trefoil from BS" + pair_name(m, m));
    if (want && got) c.that(certified_epi(quotient_certificate(trefoil, m, m)), "certificate " + pair_name(m, m));
  }
  struct Instance {
    long q, r, x, y;
  };
  for (Instance p : {Instance{3, 2, 2, 5}, Instance{4, 2, 2, 3}, Instance{6, 4, 3, 6}}) {
    LabelledGraph g = ptit(p.q, p.r, p.x, p.y);
    long a = p.q * p.x, b = p.q * p.y;
    for (long m = -40; m <= 40; ++m) {
      for (long n = -40; n <= 40; ++n) {
        if (!m || !n) continue;
        bool want = multiple_of(m, n, a, b) || multiple_of(m, n, b, a);
        bool got = is_quotient_of_bs(g, m, n).answer;
        c.that(got == want, "ptit " + pair_name(a, b) + " from " + pair_name(m, n));
      }
    }
    c.that(certified_epi(quotient_certificate(g, a, b)), "ptit certificate " + pair_name(a, b));
    c.that(certified_epi(quotient_certificate(g, -2 * b, -2 * a)), "ptit certificate " + pair_name(-2 * b, -2 * a));
  }
  for (int n = 1; n <= 4; ++n) {
    LabelledGraph gn = chain_graph(n);
    c.that(is_quotient_of_bs(gn, 18, 36).answer, "G_" + std::to_string(n));
    c.that(certified_epi(quotient_certificate(gn, 18, 36)), "G_" + std::to_string(n) + " certificate");
    c.that(certified_epi(chain_step_epi(n)), "G_" + std::to_string(n) + " onto the next");
  }
  return c.result("segment, lollipop grid and chain");
}

// Criterion 6.
Outcome hop_maps() {
  Check c;
  LabelledGraph hop = parse_graph_text("vertex a\nvertex b\nedge e a b 3 3\nedge t b a 2 4\n");
  HomCertificate onto42 = hom_from_strings(hop, 0, bs_graph(4, 2), 0, {"a(a)", "a(a)", "t(t)^-1"}, "onto BS(4,2)");
  HomCertificate onto63 =
      hom_from_strings(hop, 0, bs_graph(6, 3), 0, {"a(a)", "t(t) a(a)^2 t(t)^-1", "t(t)^-1"}, "onto BS(6,3)");
  c.that(certified_epi(onto42), "onto BS(4,2)");
  c.that(certified_epi(onto63), "onto BS(6,3)");
  MinimalSource ms = minimal_bs_source(hop);
  c.that(same_bs_params(ms.m, ms.n, 12, 6), "minimal source is BS(12,6)");
  c.that(!maps_onto_minimal_bs(hop).answer, "maps onto BS(12,6)");
  for (long alpha = 1; alpha <= 7; ++alpha) {
    for (long beta = 1; beta <= 7; ++beta) {
      for (long gamma = 1; gamma <= 7; gamma += 2) {
        bool want = gcd_long(gamma, alpha) == 1;
        bool got = epi_equivalent_bs(bil(alpha, beta, gamma)).has_value();
        c.that(got == want, "bil alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta) +
                                " gamma=" + std::to_string(gamma));
      }
    }
  }
  return c.result("explicit maps and bil grid");
}

bool prime_power_pair(long m, long n) {
  std::set<long> a = prime_set(m), b = prime_set(n);
  return a.size() == 1 && a == b;
}

// Criterion 7.
Outcome finite_quotients() {
  Check c;
  for (long m = -kGrid; m <= kGrid; ++m) {
    for (long n = -kGrid; n <= kGrid; ++n) {
      if (!m || !n) continue;
      bool want = gcd_long(m, n) == 1 || (prime_long(m) && m != n) || (prime_long(n) && m != n) || m == -n ||
                  (prime_power_pair(m, n) && m != n);
      c.that(finitely_many_quotients(m, n).answer == want, pair_name(m, n));
    }
  }
  Family f = infinite_family(4, 6, 5);
  c.that(f.members.size() == 5, "five members");
  std::vector<LabelledGraph> seen;
  for (const FamilyMember& m : f.members) {
    std::string name = "G_" + std::to_string(m.N);
    c.that(certified_epi(m.certificate), name + " certificate");
    c.that(m.certificate.source == bs_graph(4, 6), name + " source");
    std::optional<BSPair> e = epi_equivalent_bs(m.graph);
    c.that(e && same_bs_params(e->m, e->n, 4, 6), name + " epi-equivalent to BS(4,6)");
    for (const LabelledGraph& other : seen) c.that(!(other == m.graph), name + " repeats a member");
    seen.push_back(m.graph);
  }
  return c.result("clause grid and (4,6) family");
}

// Criterion 8.
Outcome residual_finiteness() {
  Check c;
  c.that(!is_rf_bs(2, 4), "(2,4)");
  c.that(is_rf_bs(1, 6), "(1,6)");
  c.that(is_rf_bs(5, -5), "(5,-5)");
  c.that(is_rf_bs(2, 2), "(2,2)");
  c.that(!is_rf_bs(2, 3), "(2,3)");
  for (long m = -kGrid; m <= kGrid; ++m) {
    for (long n = -kGrid; n <= kGrid; ++n) {
      if (!m || !n) continue;
      c.that(is_rf_gbs(bs_graph(m, n)).answer == is_rf_bs(m, n), pair_name(m, n));
    }
  }
  return c.result("table and loop graphs");
}

// Criterion 9.
Outcome center_index() {
  Check c;
  std::mt19937 rng(2024);
  for (int i = 0; i < kCenterSegments; ++i) {
    int k = 1 + rng() % 5;
    std::vector<Int> q = testing::random_labels(rng, k, 20);
    std::vector<Int> r = testing::random_labels(rng, k, 20);
    Int r0 = testing::random_label(rng, 20);
    c.that(segment_center_index(r0, q, r) == testing::center_index_oracle(r0, q, r), "random segment " + std::to_string(i));
  }
  int coprime_cases = 0;
  while (coprime_cases < 200) {
    int k = 1 + rng() % 4;
    std::vector<Int> q = testing::random_labels(rng, k, 20);
    std::vector<Int> r = testing::random_labels(rng, k, 20);
    Int r0 = testing::random_label(rng, 20);
    bool hyp = true;
    for (int j = 0; j < k && hyp; ++j) {
      for (int i = 0; i <= j && hyp; ++i) {
        const Int& ri = i == 0 ? r0 : r[i - 1];
        hyp = gcd(q[j], ri) == 1;
      }
    }
    if (!hyp) continue;
    Int prod = 1;
    for (const Int& x : q) prod *= x;
    c.that(segment_center_index(r0, q, r) == abs_int(prod), "coprime case");
    ++coprime_cases;
  }
  for (long p : {2L, 3L, 5L, 7L}) {
    for (unsigned alpha = 1; alpha <= 3; ++alpha) {
      for (int i = 0; i < 20; ++i) {
        int k = 1 + rng() % 4;
        auto unit = [&] {
          Int u;
          do u = testing::random_label(rng, 9);
          while (divides(Int(p), u));
          return Int(u * ipow(p, alpha));
        };
        std::vector<Int> q, r;
        for (int j = 0; j < k; ++j) {
          q.push_back(unit());
          r.push_back(unit());
        }
        Int n = segment_center_index(1, q, r);
        c.that(valuation(n, p) == alpha, "exact power of " + std::to_string(p));
      }
    }
  }
  return c.result("oracle and targeted assertions");
}

// Criterion 10.
Outcome rank_formula() {
  Check c;
  c.that(mu(bs_graph(2, 3)).rank == 2, "BS(2,3)");
  c.that(mu(segment_graph({Int(2)}, {Int(3)})).rank == 2, "trefoil");
  c.that(mu(ptit(3, 2, 2, 5)).rank == 2, "ptit (3,2,2,5)");
  c.that(mu(ptit(4, 2, 2, 3)).rank == 2, "ptit (4,2,2,3)");
  for (int n = 1; n <= 6; ++n) c.that(mu(chain_graph(n)).rank == 2, "G_" + std::to_string(n));
  LabelledGraph interior = segment_graph({Int(2), Int(3)}, {Int(3), Int(2)});
  c.that(mu(interior).rank >= 3, "interior plateau");
  c.that(!is_two_generated(interior).two_generated, "interior plateau is two-generated");
  std::mt19937 rng(77);
  for (int i = 0; i < 300; ++i) {
    LabelledGraph g = reduce(testing::random_graph(rng, 2 + rng() % 5, rng() % 2, 12)).first;
    std::vector<VertexId> order(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    c.that(mu(g).mu == mu(g, order).mu, "permuted order");
  }
  return c.result("examples and permuted order");
}

std::string half_edge_name(const LabelledGraph& g, HalfEdge h) {
  return std::string("half-edge ") + (h % 2 == 0 ? ">" : "<") + g.edge_name(edge_of(h));
}

// A mutation is caught when some violation names an affected vertex or a
// half-edge starting at one.
bool localized(const WeaklyAdmissibleMap& f, const WadmReport& rep, const std::vector<VertexId>& affected) {
  if (rep.ok) return false;
  std::set<std::string> names;
  for (VertexId v : affected) {
    names.insert("vertex " + f.source.vertex_name(v));
    for (HalfEdge h : f.source.half_edges_at(v)) names.insert(half_edge_name(f.source, h));
  }
  for (const Violation& v : rep.violations) {
    if (names.count(v.location)) return true;
  }
  return false;
}

void mutate_and_check(const WeaklyAdmissibleMap& base, std::mt19937& rng, Check& c, const std::string& what) {
  c.that(check_weakly_admissible(base).ok, what + " passes");
  for (int i = 0; i < kMutations; ++i) {
    WeaklyAdmissibleMap f = base;
    std::vector<VertexId> affected;
    std::string field;
    int kind = rng() % 5;
    if (kind == 3 && f.target.num_vertices() < 2) kind = 0;
    if (kind == 0) {
      VertexId x = rng() % f.source.num_vertices();
      f.vertex_mult[x] += 1 + rng() % 3;
      affected = {x};
      field = "vertex multiplicity";
    } else if (kind == 1) {
      EdgeId e = rng() % f.source.num_edges();
      f.edge_mult[e] += 1 + rng() % 3;
      affected = {f.source.origin(2 * e), f.source.terminus(2 * e)};
      field = "edge multiplicity";
    } else if (kind == 2) {
      HalfEdge h = rng() % f.source.num_half_edges();
      f.source.set_label(h, f.source.label(h) + 1 + rng() % 3);
      if (f.source.label(h) == 0) f.source.set_label(h, 7);
      affected = {f.source.origin(h)};
      field = "label";
    } else if (kind == 3) {
      VertexId x = rng() % f.source.num_vertices();
      f.vertex_image[x] = (f.vertex_image[x] + 1 + rng() % (f.target.num_vertices() - 1)) % f.target.num_vertices();
      affected = {x};
      field = "vertex image";
    } else {
      EdgeId e = rng() % f.source.num_edges();
      HalfEdge old = f.edge_image[e];
      HalfEdge next = old;
      while (next == old) next = rng() % f.target.num_half_edges();
      f.edge_image[e] = next;
      affected = {f.source.origin(2 * e), f.source.terminus(2 * e)};
      field = "edge image";
    }
    c.that(localized(f, check_weakly_admissible(f), affected), what + " " + field + " mutation " + std::to_string(i));
  }
}

// Criterion 11.
Outcome checker_mutations() {
  Check c;
  std::mt19937 rng(99);
  WeaklyAdmissibleMap simp = simp_map(3, 2, 2, 3, false);
  c.that(reduces_to(simp.source, 4, 8), "simp source");
  mutate_and_check(simp, rng, c, "simp");
  WeaklyAdmissibleMap trg = trg_map(circle_graph({Int(2), Int(3)}, {Int(5), Int(7)}));
  c.that(reduces_to(trg.source, 6, 35), "trg source");
  mutate_and_check(trg, rng, c, "trg");
  return c.result(std::to_string(2 * kMutations) + " mutations");
}

// Criterion 12.
Outcome word_properties() {
  Check c;
  std::mt19937 rng(1234);
  std::vector<LabelledGraph> graphs;
  for (int i = 0; i < 40; ++i) graphs.push_back(testing::random_graph(rng, 1 + rng() % 3, 1 + rng() % 2, 6));
  graphs.push_back(bs_graph(2, 3));
  graphs.push_back(chain_graph(2));
  for (int i = 0; i < kRelatorProducts; ++i) {
    const LabelledGraph& g = graphs[rng() % graphs.size()];
    SpanningTree t = spanning_tree(g, 0);
    Presentation p = standard_presentation(g, t);
    GBSWord acc = GBSWord::identity(0);
    int factors = 1 + rng() % 2;
    for (int j = 0; j < factors; ++j) {
      GBSWord rel = letters_to_word(g, t, p, p.relators[rng() % p.relators.size()]);
      if (rng() & 1) rel = inverse(rel);
      GBSWord conj = testing::random_word(rng, g, t, 0, 3, 3);
      acc = concat(acc, concat(conj, concat(rel, inverse(conj))));
    }
    c.that(is_trivial(g, acc), "relator product " + std::to_string(i));
  }
  int elliptic = 0;
  for (int i = 0; i < kModulusPairs; ++i) {
    const LabelledGraph& g = graphs[rng() % graphs.size()];
    SpanningTree t = spanning_tree(g, 0);
    GBSWord a = testing::random_word(rng, g, t, 0, 4, 3);
    GBSWord b = testing::random_word(rng, g, t, 0, 4, 3);
    c.that(modulus(g, concat(a, b)) == modulus(g, a) * modulus(g, b), "modulus pair " + std::to_string(i));
    for (const GBSWord& w : {a, b, concat(a, b)}) {
      if (is_elliptic(g, w)) {
        ++elliptic;
        c.that(modulus(g, w) == 1, "elliptic word with modulus != 1");
      }
    }
  }
  c.that(elliptic > 0, "no elliptic words sampled");
  return c.result("relators, modulus pairs, elliptic words");
}

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "hopficity table and prime-set oracle", hopficity},
      {2, "embedding decider catalog", obstr_catalog},
      {3, "embedding certificates on the |.| <= 12 grid", construction_grid},
      {4, "non-Hopfian pipeline on BS(2,3)", non_hopfian_pipeline},
      {5, "segment, lollipop and chain quotients with certificates", debs_quotients},
      {6, "epimorphisms onto BS(4,2), BS(6,3) and the bil grid", hop_maps},
      {7, "finitely many quotients and the (4,6) family", finite_quotients},
      {8, "residual finiteness", residual_finiteness},
      {9, "segment center index against the divisibility chain", center_index},
      {10, "rank formula", rank_formula},
      {11, "weakly admissible checker and mutations", checker_mutations},
      {12, "word engine properties", word_properties},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    if (!out.ok) ++failed;
    std::cout << (out.ok ? "PASS " : "FAIL ") << c.id << ": " << c.name << " [" << timing << "]: " << out.detail
              << "\n";
    std::cout.flush();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
