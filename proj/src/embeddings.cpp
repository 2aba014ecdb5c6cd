#include "gbs/embeddings.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "gbs/bs_arith.hpp"
#include "gbs/embed_constructions.hpp"
#include "gbs/errors.hpp"
#include "gbs/graph_io.hpp"
#include "gbs/modular.hpp"
#include "gbs/number_theory.hpp"
#include "gbs/shape.hpp"

namespace gbs {

namespace {

bool is_unit(const Int& a) { return abs_int(a) == 1; }

std::string bs_name(const Int& m, const Int& n) { return "BS(" + to_string(m) + "," + to_string(n) + ")"; }

// Least x >= 1 with d | base^x.
long least_power(const Int& d, const Int& base) {
  for (long x = 1;; ++x) {
    if (divides(d, ipow(base, x))) return x;
    if (x > 4096) throw InternalError("no power of " + to_string(base) + " is divisible by " + to_string(d));
  }
}

// x >= 1 with |a| = |base|^x.
std::optional<long> exact_power(const Int& a, const Int& base) {
  if (is_unit(base)) return std::nullopt;
  Int p = abs_int(base);
  for (long x = 1; p <= abs_int(a); ++x, p *= abs_int(base)) {
    if (p == abs_int(a)) return x;
  }
  return std::nullopt;
}

// Circle with the extra hair when r = +-m Delta^x, plain circle otherwise.
bool use_hair(const Int& r, const Int& m, const Int& delta) { return divides(m, r) && exact_power(r / m, delta); }

long ceil_div(long a, long b) { return (a + b - 1) / b; }

struct Core {
  WeaklyAdmissibleMap map;
  std::string route;
  Int nu = 1;  // aug1 factor applied to the requested pair
  std::vector<std::string> notes;
};

std::string block_note(const std::vector<Block>& blocks) {
  std::ostringstream os;
  os << "block multiplicity ratios:";
  for (const Block& b : blocks) os << ' ' << b.length << (b.reversed ? "r" : "f") << "x" << to_string(b.ratio);
  return os.str();
}

// Seven-block circle for BS(r, s) in BS(g m, g n), m ^ n = 1, r/s = (m/n)^beta.
Core gros_core(const Int& r, const Int& m, const Int& n, long beta, const Int& g) {
  Int mb = ipow(m, beta);
  if (!divides(mb, r)) throw InternalError("gros: ratio bookkeeping failed");
  Int gamma = r / mb;
  long x = 1, y = 1;
  for (const Int& p : prime_divisors(gamma)) {
    long vg = valuation(gamma, p);
    if (divides(p, m)) {
      x = std::max(x, ceil_div(vg, valuation(m, p)));
    } else if (divides(p, n)) {
      y = std::max(y, ceil_div(vg, valuation(n, p)));
    } else {
      throw InternalError("gros: prime " + to_string(p) + " of the subgroup does not divide mn");
    }
  }
  Core c;
  std::vector<Block> blocks;
  c.map = gros_map(m, n, x, y, beta, g, &blocks);
  c.nu = ipow(m, x) * ipow(n, y) / gamma;
  c.route = g == 1 ? "gros" : "gros-scaled";
  c.notes.push_back("x=" + std::to_string(x) + " y=" + std::to_string(y) + " beta=" + std::to_string(beta));
  c.notes.push_back(block_note(blocks));
  if (g != 1) c.notes.push_back("multiplicities scaled by " + to_string(g));
  return c;
}

// Circle for BS(r, s) in BS(m, Delta m), s/r = Delta^beta.
Core simp_core(const Int& r, const Int& m, const Int& delta, long beta, bool hair, const Int& r_scale) {
  Int r1 = r / r_scale;
  for (const Int& p : prime_divisors(r1)) {
    if (!divides(p, delta)) throw InternalError("simp: prime " + to_string(p) + " does not divide Delta");
  }
  long x = is_unit(delta) ? 1 : least_power(r1, delta);
  Core c;
  c.map = simp_map(m, delta, x, x + beta, hair);
  c.nu = ipow(delta, x) / r1;
  c.route = hair ? "simp-variant" : "simp";
  c.notes.push_back("Delta=" + to_string(delta) + " x=" + std::to_string(x) + " y=" + std::to_string(x + beta));
  return c;
}

std::optional<std::pair<Int, Int>> reduced_loop(const LabelledGraph& g) { return loop_labels(reduce(g).first); }

bool loop_matches(const std::optional<std::pair<Int, Int>>& l, const Int& a, const Int& b) {
  return l && same_bs_params(l->first, l->second, a, b);
}

EmbeddingCertificate finish(EmbeddingCertificate c) {
  c.source_trace = reduce(c.core.source).second;
  c.target_trace = reduce(c.core.target).second;
  if (c.prefix) c.prefix_trace = reduce(c.prefix->target).second;
  WadmReport rep = verify_embedding(c);
  if (!rep.ok) {
    throw InternalError("constructed certificate fails: " + rep.violations.front().location + ": " +
                        rep.violations.front().message);
  }
  return c;
}

}  // namespace

std::optional<std::pair<Int, Int>> loop_labels(const LabelledGraph& g) {
  if (g.num_vertices() != 1 || g.num_edges() != 1) return std::nullopt;
  return std::make_pair(g.label(0), g.label(1));
}

WadmReport verify_embedding(const EmbeddingCertificate& c) {
  WadmReport rep;
  auto fail = [&rep](std::string where, std::string what) {
    rep.ok = false;
    rep.violations.push_back({std::move(where), std::move(what)});
  };
  auto merge = [&rep](const std::string& prefix, const WadmReport& r) {
    for (const Violation& v : r.violations) rep.violations.push_back({prefix + v.location, v.message});
    if (!r.ok) rep.ok = false;
  };
  auto replayed = [&](const LabelledGraph& g, const std::vector<MoveRecord>& trace,
                      const std::string& what, bool circle_ok = false) -> std::optional<std::pair<Int, Int>> {
    try {
      LabelledGraph end = replay(g, trace);
      auto l = loop_labels(end);
      if (!l && circle_ok && is_reduced(end) && classify_shape(end).kind == Shape::Circle) return l;
      if (!l) fail(what, "trace does not end in a single loop");
      return l;
    } catch (const std::exception& e) {
      fail(what, std::string("trace does not replay: ") + e.what());
      return std::nullopt;
    }
  };
  Int want_a = c.r, want_b = c.s;
  if (c.prefix) {
    merge("prefix ", check_weakly_admissible(*c.prefix));
    auto src = loop_labels(c.prefix->source);
    if (!src || !same_bs_params(src->first, src->second, c.r, c.s)) {
      fail("prefix source", "is not the loop " + bs_name(c.r, c.s));
    }
    auto l = replayed(c.prefix->target, c.prefix_trace, "prefix trace");
    if (l) {
      want_a = l->first;
      want_b = l->second;
    }
  }
  merge("core ", check_weakly_admissible(c.core));
  auto ls = replayed(c.core.source, c.source_trace, "source trace");
  if (ls && !same_bs_params(ls->first, ls->second, want_a, want_b)) {
    fail("source trace", "ends in " + bs_name(ls->first, ls->second) + ", expected " + bs_name(want_a, want_b));
  }
  auto lt = replayed(c.core.target, c.target_trace, "target trace", c.route == "trg");
  if (lt && !same_bs_params(lt->first, lt->second, c.m, c.n)) {
    fail("target trace", "ends in " + bs_name(lt->first, lt->second) + ", expected " + bs_name(c.m, c.n));
  }
  return rep;
}

EmbeddingCertificate circle_bs_subgroup(const LabelledGraph& circle, const Int& m, const Int& n) {
  Shape sh = classify_shape(circle);
  if (sh.kind != Shape::Circle) throw InputError("graph is not a circle");
  QRXY p = qrxy(sh);
  if (gcd(p.X, p.Y) != 1) throw InputError("X = " + to_string(p.X) + " and Y = " + to_string(p.Y) + " are not coprime");
  if (!same_bs_params(m, n, p.X, p.Y)) {
    throw InputError("the circle has X = " + to_string(p.X) + ", Y = " + to_string(p.Y) + ", not " + bs_name(m, n));
  }
  EmbeddingCertificate c;
  c.r = m;
  c.s = n;
  if (sh.l == 1 && (is_unit(p.X) || is_unit(p.Y))) {
    c.route = "identity";
    c.core = derive_map(circle, circle, {0}, {0}, {1});
  } else {
    c.route = "trg";
    c.core = trg_map(circle);
  }
  c.m = p.X;
  c.n = p.Y;
  c.source_trace = reduce(c.core.source).second;
  c.target_trace = reduce(c.core.target).second;
  auto lt = loop_labels(replay(c.core.target, c.target_trace));
  if (lt) {
    c.m = lt->first;
    c.n = lt->second;
  } else {
    c.notes.push_back("target is a reduced circle with " + std::to_string(sh.l) + " vertices");
  }
  if (!verify_embedding(c).ok) throw InternalError("circle subgroup certificate fails its own check");
  return c;
}

bool contains_bs(const LabelledGraph& g, const Int& m, const Int& n) {
  if (gcd(m, n) != 1) throw InputError("contains_bs needs coprime m, n");
  if (abs_int(m) == abs_int(n)) throw InputError("contains_bs needs m != +-n");
  LabelledGraph red = reduce(g).first;
  if (red.num_edges() == 0) throw InputError("contains_bs needs a non-elementary group");
  if (auto l = loop_labels(red); l && is_unit(l->first) && is_unit(l->second)) {
    throw InputError("contains_bs needs a non-elementary group");
  }
  return modular_image(red).contains(make_rational(m, n));
}

EmbeddingCertificate embed_bs_construct(const Int& r0, const Int& s0, const Int& m0, const Int& n0) {
  if (is_unit(r0) && is_unit(s0)) throw InputError("BS(r,s) with r, s = +-1 is elementary; use the elementary test");
  if (r0 == 0 || s0 == 0 || m0 == 0 || n0 == 0) throw InputError("Baumslag-Solitar parameters must be nonzero");
  Decision d = embeds_bs(r0, s0, m0, n0);
  if (!d.answer) throw InputError(bs_name(r0, s0) + " does not embed in " + bs_name(m0, n0) + ": " + d.reason);
  EmbeddingCertificate cert;
  cert.r = r0;
  cert.s = s0;
  cert.m = m0;
  cert.n = n0;
  if (same_bs_params(r0, s0, m0, n0)) {
    cert.route = "identity";
    cert.core = derive_map(bs_graph(m0, n0), bs_graph(m0, n0), {0}, {0}, {1});
    return finish(cert);
  }
  Int r = r0, s = s0, m = m0, n = n0;
  if (is_unit(n) && !is_unit(m)) {
    std::swap(m, n);
    std::swap(r, s);
  }
  long beta = *power_of_ratio(r, s, m, n);
  if (beta < 0) {
    std::swap(r, s);
    beta = -beta;
  }
  if (is_unit(m)) {
    cert.route = "cover";
    cert.core = cover_map(m, n, beta);
    cert.notes.push_back("beta=" + std::to_string(beta));
    return finish(cert);
  }
  Int delta1 = 1, nu1 = 1;
  for (const Int& p : prime_divisors(m)) {
    unsigned a = valuation(m, p);
    if (valuation(n, p) != a) continue;
    delta1 *= ipow(p, a);
    unsigned vr = valuation(r, p);
    if (vr > a || valuation(s, p) != vr) throw InternalError("shared prime bookkeeping failed at " + to_string(p));
    nu1 *= ipow(p, a - vr);
  }
  Int m1 = m / delta1, n1 = n / delta1;
  if (is_unit(n1) && !is_unit(m1)) {
    std::swap(m, n);
    std::swap(m1, n1);
    std::swap(r, s);
  }
  Core core;
  if (is_unit(m1)) {
    core = simp_core(r * nu1, m, n / m, beta, true, delta1);
  } else {
    Int r1 = r * nu1 / delta1, s1 = s * nu1 / delta1;
    Int g = gcd(m1, n1);
    if (g == 1) {
      core = gros_core(r1, m1, n1, beta, 1);
    } else if (divides(m1, n1)) {
      bool hair = use_hair(r1, m1, n1 / m1);
      core = simp_core(r1, m1, n1 / m1, beta, hair, hair ? m1 : Int(1));
    } else if (divides(n1, m1)) {
      bool hair = use_hair(s1, n1, m1 / n1);
      core = simp_core(s1, n1, m1 / n1, beta, hair, hair ? n1 : Int(1));
    } else {
      core = gros_core(r1, m1 / g, n1 / g, beta, g);
    }
    if (delta1 != 1) {
      Int want_a = delta1 * r1 * core.nu, want_b = delta1 * s1 * core.nu;
      std::optional<WeaklyAdmissibleMap> haired;
      for (VertexId x = 0; x < core.map.source.num_vertices() && !haired; ++x) {
        if (gcd(core.map.vertex_mult[x], delta1) != 1) continue;
        WeaklyAdmissibleMap f = add_hair(core.map, x, delta1);
        if (!loop_matches(reduced_loop(f.source), want_a, want_b)) continue;
        cert.aug.push_back({"aug2", delta1, core.map.vertex_mult[x], core.map.source.vertex_name(x)});
        haired = std::move(f);
      }
      if (!haired) throw InternalError("no hair vertex with index coprime to " + to_string(delta1));
      core.map = std::move(*haired);
    }
  }
  cert.route = core.route;
  cert.core = std::move(core.map);
  cert.notes = std::move(core.notes);
  Int nu = nu1 * core.nu;
  if (!is_unit(nu)) {
    cert.prefix = aug1_map(r0, s0, nu);
    cert.aug.insert(cert.aug.begin(), AugRecord{"aug1", nu, 1, "a"});
  }
  return finish(cert);
}

bool subgroup_of_bs_nn(const LabelledGraph& g0, const Int& n, bool up_to_sign) {
  if (n < 2) throw InputError("n must be at least 2");
  LabelledGraph g = reduce(g0).first;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto hs = g.half_edges_at(v);
    for (HalfEdge h : hs) {
      if (abs_int(g.label(h)) != abs_int(g.label(hs.front())) || !divides(g.label(h), n)) return false;
    }
  }
  if (up_to_sign) return true;
  // Vertex signs eps with eps_v eps_w = sign(label near v) sign(label near w)
  // on every edge; edge sign changes then make all labels positive.
  std::vector<int> eps(g.num_vertices(), 0);
  for (VertexId root = 0; root < g.num_vertices(); ++root) {
    if (eps[root] != 0) continue;
    eps[root] = 1;
    std::vector<VertexId> stack = {root};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (HalfEdge h : g.half_edges_at(v)) {
        VertexId w = g.origin(reverse(h));
        int want = eps[v] * sign(g.label(h)) * sign(g.label(reverse(h)));
        if (eps[w] == 0) {
          eps[w] = want;
          stack.push_back(w);
        } else if (eps[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<Int> embeds_in_some_bs_nn(const LabelledGraph& g0) {
  LabelledGraph g = reduce(g0).first;
  Int l = 1;
  for (HalfEdge h = 0; h < g.num_half_edges(); ++h) l = lcm(l, g.label(h));
  if (l < 2) l = 2;
  if (subgroup_of_bs_nn(g, l)) return l;
  return std::nullopt;
}

ElementaryContainment contains_z2_k(const LabelledGraph& g0) {
  LabelledGraph g = reduce(g0).first;
  ElementaryContainment out;
  if (g.num_edges() == 0) {
    out.z2 = false;
    out.k = Decision::no("the group is cyclic");
    return out;
  }
  if (auto l = loop_labels(g); l && (is_unit(l->first) || is_unit(l->second))) {
    out.z2 = is_unit(l->first) && is_unit(l->second);
    bool k = embeds_elementary(Elementary::K, l->first, l->second);
    out.k = k ? Decision::yes("BS(1,-1) is the Klein bottle group") : Decision::no("solvable BS(1,n) with n != -1");
    return out;
  }
  out.z2 = true;
  if (modular_image(g).contains_minus_one()) {
    out.k = Decision::yes("-1 is a modulus");
    return out;
  }
  for (HalfEdge h = 0; h < g.num_half_edges(); ++h) {
    if (divides(2, g.label(h))) {
      out.k = Decision::yes("even label " + to_string(g.label(h)) + " on edge " + g.edge_name(edge_of(h)));
      return out;
    }
  }
  out.k = Decision::no("no modulus -1 and no even label in the given graph");
  out.k.caveat = true;
  out.k.caveat_text = "another graph representing the same group might carry an even label";
  return out;
}

Json embedding_to_json(const EmbeddingCertificate& c) {
  auto trace = [](const std::vector<MoveRecord>& t) {
    Json a = Json::array();
    for (const auto& r : t) a.push_back(move_to_json(r));
    return a;
  };
  Json aug = Json::array();
  for (const auto& a : c.aug) {
    aug.push_back({{"kind", a.kind}, {"nu", int_to_json(a.nu)}, {"index", int_to_json(a.index)}, {"vertex", a.vertex}});
  }
  Json j = {{"type", "embedding"},
            {"subgroup", {int_to_json(c.r), int_to_json(c.s)}},
            {"group", {int_to_json(c.m), int_to_json(c.n)}},
            {"route", c.route},
            {"core", wadm_to_json(c.core)},
            {"source_trace", trace(c.source_trace)},
            {"target_trace", trace(c.target_trace)},
            {"aug", aug},
            {"notes", c.notes}};
  if (c.prefix) {
    j["prefix"] = wadm_to_json(*c.prefix);
    j["prefix_trace"] = trace(c.prefix_trace);
  }
  return j;
}

EmbeddingCertificate embedding_from_json(const Json& j) {
  try {
    if (j.at("type") != "embedding") throw InputError("not an embedding certificate");
    EmbeddingCertificate c;
    c.r = int_from_json(j.at("subgroup").at(0));
    c.s = int_from_json(j.at("subgroup").at(1));
    c.m = int_from_json(j.at("group").at(0));
    c.n = int_from_json(j.at("group").at(1));
    c.route = j.at("route").get<std::string>();
    c.core = wadm_from_json(j.at("core"));
    for (const auto& r : j.at("source_trace")) c.source_trace.push_back(move_from_json(r));
    for (const auto& r : j.at("target_trace")) c.target_trace.push_back(move_from_json(r));
    if (j.contains("prefix")) {
      c.prefix = wadm_from_json(j.at("prefix"));
      for (const auto& r : j.at("prefix_trace")) c.prefix_trace.push_back(move_from_json(r));
    }
    for (const auto& a : j.value("aug", Json::array())) {
      c.aug.push_back({a.at("kind").get<std::string>(), int_from_json(a.at("nu")), int_from_json(a.at("index")),
                       a.at("vertex").get<std::string>()});
    }
    c.notes = j.value("notes", std::vector<std::string>{});
    return c;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed embedding certificate: ") + e.what());
  }
}

std::string embedding_to_text(const EmbeddingCertificate& c) {
  std::ostringstream os;
  os << bs_name(c.r, c.s) << " embeds in ";
  if (c.route == "trg" && !loop_labels(c.core.target)) {
    os << "the group of the circle target";
  } else {
    os << bs_name(c.m, c.n);
  }
  os << " (route " << c.route << ")\n";
  for (const auto& a : c.aug) {
    os << "  " << a.kind << ": nu=" << to_string(a.nu);
    if (a.kind == "aug2") os << " at " << a.vertex << " index " << to_string(a.index);
    os << '\n';
  }
  os << "  source: " << c.core.source.num_vertices() << " vertices, " << c.core.source.num_edges() << " edges\n";
  for (const auto& note : c.notes) os << "  " << note << '\n';
  return os.str();
}

}  // namespace gbs
