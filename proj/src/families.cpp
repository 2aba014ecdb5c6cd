#include "gbs/errors.hpp"
#include "gbs/hom_constructions.hpp"
#include "gbs/quotients.hpp"

namespace gbs {

ChainLink descending_chain(int n) {
  if (n < 1) throw InputError("chain index must be at least 1");
  return ChainLink{chain_graph(n), chain_source_epi(n), chain_step_epi(n), chain_target_epi(n)};
}

namespace {

std::vector<Int> divisors_above_one(const Int& a) {
  std::vector<Int> out;
  Int x = abs_int(a);
  for (Int d = 2; d * d <= x; ++d) {
    if (divides(d, x)) out.push_back(d);
  }
  size_t small = out.size();
  for (size_t i = small; i-- > 0;) {
    Int e = x / out[i];
    if (e != out[i]) out.push_back(e);
  }
  if (x > 1) out.push_back(x);
  return out;
}

// a^Q = b^R, t b^X t^-1 = b^Y.
LabelledGraph two_edge_lollipop(const Int& Q, const Int& R, const Int& X, const Int& Y) {
  return lollipop_graph({Q}, {R}, {X}, {Y});
}

FamilyMember member(int N, const LabelledGraph& g, const Int& m, const Int& n) {
  HomCertificate c = theorem_deBS_epi(g, m, n);
  c.provenance = "BS(" + to_string(m) + "," + to_string(n) + ") onto family member N=" + std::to_string(N);
  return FamilyMember{N, g, c};
}

}  // namespace

Family infinite_family(const Int& m, const Int& n, int count) {
  Decision fin = finitely_many_quotients(m, n);
  if (fin.answer) throw InputError("BS(" + to_string(m) + "," + to_string(n) + ") has finitely many GBS quotients (" + fin.reason + ")");
  if (count < 1) throw InputError("count must be positive");
  Family f;
  if (m == n) {
    // <a, b | a^m = b^N>, skipping the Klein bottle group.
    f.kind = "segment";
    f.parameters = "a^" + to_string(m) + " = b^N";
    for (int N = 2; static_cast<int>(f.members.size()) < count; ++N) {
      if (abs_int(m) == 2 && N == 2) continue;
      f.members.push_back(member(N, segment_graph({m}, {Int(N)}), m, n));
    }
    return f;
  }
  if (divides(m, n) || divides(n, m)) {
    const Int& a = divides(m, n) ? m : n;  // the divisor
    const Int& b = divides(m, n) ? n : m;
    Int ratio = b / a;
    // a = alpha beta, b = alpha beta gamma delta, alpha ^ delta = 1, alpha, beta, delta != +-1.
    // delta is the smallest prime dividing b but not a when one exists.
    Int alpha, beta, gamma, delta;
    bool found = false;
    for (const auto& p : prime_divisors(ratio)) {
      if (divides(p, a)) continue;
      for (const auto& al : divisors_above_one(a)) {
        if (abs_int(a / al) > 1) {
          alpha = al;
          delta = p;
          found = true;
          break;
        }
      }
      if (found) break;
    }
    for (const auto& al : divisors_above_one(a)) {
      if (found) break;
      if (abs_int(a / al) < 2) continue;
      for (const auto& de : divisors_above_one(ratio)) {
        if (gcd(al, de) == 1) {
          alpha = al;
          delta = de;
          found = true;
          break;
        }
      }
    }
    if (!found) throw InternalError("no H_N factorisation");
    beta = a / alpha;
    gamma = ratio / delta;
    f.kind = "H_N";
    f.parameters = "alpha=" + to_string(alpha) + ", beta=" + to_string(beta) + ", gamma=" + to_string(gamma) +
                   ", delta=" + to_string(delta);
    bool swapped = !divides(m, n);
    for (int N = 2; static_cast<int>(f.members.size()) < count; ++N) {
      Int dN = ipow(delta, static_cast<unsigned long>(N));
      if (divides(dN, gamma * delta)) continue;
      Int X = alpha, Y = alpha * gamma * delta;
      f.members.push_back(member(N, swapped ? two_edge_lollipop(beta, dN, Y, X) : two_edge_lollipop(beta, dN, X, Y), m, n));
    }
    return f;
  }
  // Neither divides the other: m = delta m', n = delta n'.
  Int delta = gcd(m, n);
  Int m1 = m / delta, n1 = n / delta;
  // p divides n' and not m when possible, else m' and not n, else the smallest prime of n'.
  Int p;
  bool swapped = false;
  for (const auto& q : prime_divisors(n1)) {
    if (!divides(q, m)) {
      p = q;
      break;
    }
  }
  if (p == 0) {
    for (const auto& q : prime_divisors(m1)) {
      if (!divides(q, n)) {
        p = q;
        swapped = true;
        break;
      }
    }
  }
  if (p == 0) p = prime_divisors(n1).front();
  const Int& host = swapped ? m1 : n1;
  f.kind = "G_N";
  f.parameters = "delta=" + to_string(delta) + ", m'=" + to_string(m1) + ", n'=" + to_string(n1) + ", p=" + to_string(p) +
                 (swapped ? ", p taken from m'" : "");
  for (int N = 2; static_cast<int>(f.members.size()) < count; ++N) {
    Int pN = ipow(p, static_cast<unsigned long>(N));
    if (divides(pN, host)) continue;
    f.members.push_back(member(N, two_edge_lollipop(delta, pN, m1, n1), m, n));
  }
  return f;
}

}  // namespace gbs
