#include "gbs/quotients.hpp"

#include "gbs/errors.hpp"
#include "gbs/hom_constructions.hpp"
#include "gbs/modular.hpp"
#include "gbs/moves.hpp"
#include "gbs/plateau.hpp"

namespace gbs {

namespace {

bool is_unit(const Int& a) { return abs_int(a) == 1; }

std::string pair_string(const Int& m, const Int& n) { return "(" + to_string(m) + "," + to_string(n) + ")"; }

bool is_multiple(const Int& m, const Int& n, const Int& M, const Int& N) {
  // (m, n) = k (M, N) for an integer k.
  if (M == 0) return m == 0 && divides(N, n);
  return divides(M, m) && m / M * N == n;
}

}  // namespace

bool SourceSet::contains(const Int& m, const Int& n) const {
  if (kind == Shape::Segment) return m == n && m != 0 && (divides(Q, m) || divides(R, m));
  if (m == 0 || n == 0) return false;
  return is_multiple(m, n, M, N) || is_multiple(m, n, N, M);
}

std::string SourceSet::describe() const {
  if (kind == Shape::Segment) {
    return "BS(m,m) with " + to_string(Q) + " | m or " + to_string(R) + " | m";
  }
  return "BS(m,n) with (m,n) a multiple of " + pair_string(M, N) + " or " + pair_string(N, M);
}

bool is_klein_bottle(const LabelledGraph& r) {
  if (r.num_vertices() == 1 && r.num_edges() == 1) {
    return is_unit(r.label(0)) && is_unit(r.label(1)) && r.label(0) == -r.label(1);
  }
  if (r.num_vertices() == 2 && r.num_edges() == 1) {
    return abs_int(r.label(0)) == 2 && abs_int(r.label(1)) == 2;
  }
  return false;
}

PreparedGraph prepare(const LabelledGraph& g) {
  g.validate();
  PreparedGraph p;
  p.reduced = reduce(g).first;
  p.is_Z = p.reduced.num_edges() == 0;
  p.is_K = is_klein_bottle(p.reduced);
  p.shape = p.is_Z ? Shape{} : classify(p.reduced);
  return p;
}

namespace {

PreparedGraph prepare_two_generated(const LabelledGraph& g) {
  PreparedGraph p = prepare(g);
  if (p.is_Z) throw InputError("the group is Z");
  if (p.is_K) throw InputError("the group is the Klein bottle group");
  if (mu(p.reduced).rank > 2) throw InputError("the group is not 2-generated");
  if (p.shape.kind == Shape::Other) throw InternalError("2-generated graph with no segment, circle or lollipop shape");
  return p;
}

}  // namespace

SourceSet bs_sources(const LabelledGraph& g) {
  PreparedGraph p = prepare_two_generated(g);
  QRXY v = qrxy(p.shape);
  SourceSet s;
  s.kind = p.shape.kind;
  if (p.shape.kind == Shape::Segment) {
    s.Q = v.Q;
    s.R = v.R;
  } else {
    s.M = v.Q * v.X;
    s.N = v.Q * v.Y;
  }
  return s;
}

Decision is_quotient_of_bs(const LabelledGraph& g, const Int& m, const Int& n) {
  if (m == 0 || n == 0) throw InputError("BS parameters must be nonzero");
  SourceSet s = bs_sources(g);
  bool yes = s.contains(m, n);
  std::string why;
  if (s.kind == Shape::Segment) {
    if (m != n) {
      why = "segment: m != n";
    } else {
      why = yes ? (divides(s.Q, m) ? "segment: Q=" + to_string(s.Q) + " divides m" : "segment: R=" + to_string(s.R) + " divides m")
                : "segment: neither Q=" + to_string(s.Q) + " nor R=" + to_string(s.R) + " divides m";
    }
  } else {
    why = yes ? "multiple of " + (is_multiple(m, n, s.M, s.N) ? pair_string(s.M, s.N) : pair_string(s.N, s.M))
              : "not a multiple of " + pair_string(s.M, s.N) + " or " + pair_string(s.N, s.M);
  }
  Decision d = yes ? Decision::yes(why) : Decision::no(why);
  d.details.push_back(s.describe());
  return d;
}

HomCertificate quotient_certificate(const LabelledGraph& g, const Int& m, const Int& n) {
  if (!is_quotient_of_bs(g, m, n).answer) {
    throw InputError("not a quotient of BS(" + to_string(m) + "," + to_string(n) + ")");
  }
  ReductionCertificates red = reduction_certificates(g);
  HomCertificate c = theorem_deBS_epi(red.reduced, m, n);
  return compose(c, red.backward);
}

MinimalSource minimal_bs_source(const LabelledGraph& g) {
  SourceSet s = bs_sources(g);
  MinimalSource out;
  out.segment = s.kind == Shape::Segment;
  out.m = out.segment ? s.Q : s.M;
  out.n = out.segment ? s.R : s.N;
  return out;
}

Decision maps_onto_minimal_bs(const LabelledGraph& g) {
  PreparedGraph p = prepare_two_generated(g);
  const Shape& s = p.shape;
  if (s.kind == Shape::Segment) throw InputError("a segment group has no Baumslag-Solitar quotient");
  QRXY v = qrxy(s);
  const Int M = v.Q * v.X, N = v.Q * v.Y;
  std::string target = "BS" + pair_string(M, N);
  for (int j = 1; j < s.k; ++j) {
    for (int i = 0; i < j; ++i) {
      if (gcd(s.q[i], s.r[j - 1]) != 1) {
        return Decision::no("q_" + std::to_string(i) + " and r_" + std::to_string(j) + " are not coprime");
      }
    }
  }
  Decision d;
  if (gcd(v.X, N) == 1) {
    d = Decision::yes("X^QY = 1");
  } else if (gcd(v.Y, M) == 1) {
    d = Decision::yes("Y^QX = 1");
  } else {
    const Int& rk = s.k > 0 ? s.r.back() : Int(1);
    auto i0 = hop_i0(s.x, s.y, M, N);
    if (gcd(v.Q, rk) != 1) {
      d = Decision::no("X^QY, Y^QX and Q^r_k all exceed 1");
    } else if (!i0) {
      d = Decision::no("no i0: a prime dividing QX and QY divides a label on both sides of every cut");
    } else {
      d = Decision::yes("Q^r_k = 1 and i0 = " + std::to_string(*i0));
    }
  }
  d.details.push_back("minimal source " + target);
  return d;
}

HomCertificate minimal_bs_certificate(const LabelledGraph& g) {
  if (!maps_onto_minimal_bs(g).answer) throw InputError("the group does not map onto its minimal BS source");
  ReductionCertificates red = reduction_certificates(g);
  return compose(red.forward, theorem_hop_epi(red.reduced));
}

std::optional<BSPair> epi_equivalent_bs(const LabelledGraph& g) {
  PreparedGraph p = prepare(g);
  if (p.is_Z || p.is_K) return std::nullopt;
  if (mu(p.reduced).rank != 2) return std::nullopt;
  if (p.shape.kind != Shape::Circle && p.shape.kind != Shape::Lollipop) return std::nullopt;
  if (!maps_onto_minimal_bs(p.reduced).answer) return std::nullopt;
  QRXY v = qrxy(p.shape);
  return BSPair{v.Q * v.X, v.Q * v.Y};
}

namespace {

bool prime_power_of(const Int& a, const Int& p) {
  Int x = abs_int(a);
  while (divides(p, x) && x > 1) x /= p;
  return x == 1;
}

}  // namespace

Decision finitely_many_quotients(const Int& m, const Int& n) {
  if (m == 0 || n == 0) throw InputError("BS parameters must be nonzero");
  std::vector<std::string> clauses;
  if (gcd(m, n) == 1) clauses.push_back("clause (a): m and n coprime");
  if ((is_prime(abs_int(m)) && m != n) || (is_prime(abs_int(n)) && m != n)) {
    clauses.push_back("clause (b): a prime parameter and m != n");
  }
  if (m == -n) clauses.push_back("clause (c): m = -n");
  if (m != n && abs_int(m) > 1 && abs_int(n) > 1) {
    Int p = prime_divisors(m).front();
    if (prime_power_of(m, p) && prime_power_of(n, p)) {
      clauses.push_back("clause (d): powers of the prime " + to_string(p));
    }
  }
  if (clauses.empty()) return Decision::no("none of clauses (a)-(d) holds");
  std::string why = clauses.front();
  for (size_t i = 1; i < clauses.size(); ++i) why += "; " + clauses[i];
  Decision d = Decision::yes(why);
  d.details = clauses;
  return d;
}

std::string rigidity_name(Rigidity r) {
  switch (r) {
    case Rigidity::AllNoncyclicIso: return "all_noncyclic_iso";
    case Rigidity::AllNonsolvableIso: return "all_nonsolvable_iso";
    case Rigidity::Neither: return "neither";
  }
  return "neither";
}

Rigidity quotient_rigidity(const Int& m, const Int& n) {
  if (m == 0 || n == 0) throw InputError("BS parameters must be nonzero");
  auto noncyclic = [](const Int& a, const Int& b) { return is_unit(a) || (is_prime(abs_int(a)) && !divides(a, b)); };
  auto nonsolvable = [](const Int& a, const Int& b) { return is_unit(a) || (is_prime(abs_int(a)) && a != b); };
  if (noncyclic(m, n) || noncyclic(n, m)) return Rigidity::AllNoncyclicIso;
  if (nonsolvable(m, n) || nonsolvable(n, m)) return Rigidity::AllNonsolvableIso;
  return Rigidity::Neither;
}

Decision is_large(const LabelledGraph& g) {
  PreparedGraph p = prepare(g);
  if (p.is_Z) return Decision::no("cyclic group");
  if (p.is_K) return Decision::no("Klein bottle group, a quotient of BS(1,-1)");
  if (mu(p.reduced).rank > 2) throw InputError("largeness is decided for 2-generated groups only");
  if (p.shape.kind == Shape::Segment) return Decision::yes("segment: no BS(m,n) with m, n coprime maps onto the group");
  QRXY v = qrxy(p.shape);
  Int M = v.Q * v.X, N = v.Q * v.Y;
  if (gcd(M, N) == 1) return Decision::no("quotient of BS" + pair_string(M, N) + " with coprime parameters");
  return Decision::yes("QX^QY = " + to_string(gcd(M, N)));
}

namespace {

bool reduced_is_solvable(const LabelledGraph& r) {
  if (r.num_edges() == 0) return true;
  if (is_klein_bottle(r)) return true;
  return r.num_vertices() == 1 && r.num_edges() == 1 && (is_unit(r.label(0)) || is_unit(r.label(1)));
}

}  // namespace

Decision is_rf_gbs(const LabelledGraph& g) {
  g.validate();
  LabelledGraph r = reduce(g).first;
  if (reduced_is_solvable(r)) return Decision::yes("solvable");
  if (is_unimodular(r)) return Decision::yes("unimodular");
  Decision d = Decision::no("neither solvable nor unimodular: modular image " + modular_image(r).to_string());
  if (r.num_edges() > 1) {
    d.caveat = true;
    d.caveat_text = "solvability tested on this reduced graph only; other reduced graphs are not searched";
  }
  return d;
}

bool is_elementary(const LabelledGraph& g) {
  LabelledGraph r = reduce(g).first;
  if (r.num_edges() == 0 || is_klein_bottle(r)) return true;
  return r.num_vertices() == 1 && r.num_edges() == 1 && is_unit(r.label(0)) && is_unit(r.label(1));
}

BSQuotientReport exists_bs_quotient(const LabelledGraph& g) {
  g.validate();
  if (is_elementary(g)) throw InputError("elementary group");
  BSQuotientReport rep;
  if (betti(g) == 0) return rep;
  rep.exists = true;
  rep.elliptic_friendly = modular_image(g).is_cyclic();
  return rep;
}

}  // namespace gbs
