#include "gbs/word.hpp"

#include <random>

#include "gbs/errors.hpp"

namespace gbs {

void check_word(const LabelledGraph& g, const GBSWord& w) {
  if (w.base < 0 || w.base >= g.num_vertices()) throw InputError("malformed word: bad base vertex");
  if (w.powers.size() != w.edges.size() + 1) throw InputError("malformed word: syllable count");
  VertexId at = w.base;
  for (HalfEdge h : w.edges) {
    if (h < 0 || h >= g.num_half_edges()) throw InputError("malformed word: bad edge");
    if (g.origin(h) != at) throw InputError("malformed word: traversal does not start at current vertex");
    at = g.terminus(h);
  }
  if (at != w.base) throw InputError("malformed word: path does not return to base");
}

GBSWord concat(const GBSWord& a, const GBSWord& b) {
  GBSWord out = a;
  out.powers.back() += b.powers.front();
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  out.powers.insert(out.powers.end(), b.powers.begin() + 1, b.powers.end());
  return out;
}

GBSWord inverse(const GBSWord& w) {
  GBSWord out;
  out.base = w.base;
  out.edges.assign(w.edges.rbegin(), w.edges.rend());
  for (auto& h : out.edges) h = reverse(h);
  out.powers.clear();
  for (auto it = w.powers.rbegin(); it != w.powers.rend(); ++it) out.powers.push_back(-*it);
  return out;
}

GBSWord conjugate_by_path(const std::vector<HalfEdge>& path, const GBSWord& w, VertexId base) {
  GBSWord out = GBSWord::identity(base);
  for (HalfEdge h : path) {
    out.edges.push_back(h);
    out.powers.push_back(Int(0));
  }
  out.powers.back() += w.powers.front();
  out.edges.insert(out.edges.end(), w.edges.begin(), w.edges.end());
  out.powers.insert(out.powers.end(), w.powers.begin() + 1, w.powers.end());
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    out.edges.push_back(reverse(*it));
    out.powers.push_back(Int(0));
  }
  return out;
}

NormalForm britton_reduce(const LabelledGraph& g, const GBSWord& w) {
  check_word(g, w);
  GBSWord out = GBSWord::vertex_power(w.base, w.powers.front());
  for (size_t i = 0; i < w.edges.size(); ++i) {
    HalfEdge h = w.edges[i];
    if (!out.edges.empty() && out.edges.back() == reverse(h) && divides(g.label(h), out.powers.back())) {
      // pinch: h' a^{k label(h)} h -> a^{k label(h')} with h' = reverse(h)
      Int k = out.powers.back() / g.label(h);
      HalfEdge prev = out.edges.back();
      out.edges.pop_back();
      out.powers.pop_back();
      out.powers.back() += k * g.label(prev) + w.powers[i + 1];
      continue;
    }
    out.edges.push_back(h);
    out.powers.push_back(w.powers[i + 1]);
  }
  NormalForm nf;
  nf.trivial = out.edges.empty() && out.powers.front() == 0;
  nf.word = std::move(out);
  return nf;
}

NormalForm britton_reduce_random_order(const LabelledGraph& g, const GBSWord& w, std::uint32_t seed) {
  check_word(g, w);
  std::mt19937 rng(seed);
  GBSWord cur = w;
  while (true) {
    std::vector<size_t> pinches;
    for (size_t i = 0; i + 1 < cur.edges.size(); ++i) {
      if (cur.edges[i + 1] == reverse(cur.edges[i]) && divides(g.label(cur.edges[i + 1]), cur.powers[i + 1])) {
        pinches.push_back(i);
      }
    }
    if (pinches.empty()) break;
    size_t i = pinches[std::uniform_int_distribution<size_t>(0, pinches.size() - 1)(rng)];
    Int k = cur.powers[i + 1] / g.label(cur.edges[i + 1]);
    Int merged = cur.powers[i] + k * g.label(cur.edges[i]) + cur.powers[i + 2];
    cur.edges.erase(cur.edges.begin() + i, cur.edges.begin() + i + 2);
    cur.powers.erase(cur.powers.begin() + i, cur.powers.begin() + i + 3);
    cur.powers.insert(cur.powers.begin() + i, merged);
  }
  NormalForm nf;
  nf.trivial = cur.edges.empty() && cur.powers.front() == 0;
  nf.word = std::move(cur);
  return nf;
}

bool is_trivial(const LabelledGraph& g, const GBSWord& w) { return britton_reduce(g, w).trivial; }

bool equal(const LabelledGraph& g, const GBSWord& a, const GBSWord& b) {
  return is_trivial(g, concat(a, inverse(b)));
}

GBSWord cyclic_reduce(const LabelledGraph& g, const GBSWord& w) {
  GBSWord cur = britton_reduce(g, w).word;
  while (!cur.edges.empty()) {
    // Rotate the leading power to the end.
    cur.powers.back() += cur.powers.front();
    cur.powers.front() = 0;
    HalfEdge first = cur.edges.front();
    HalfEdge last = cur.edges.back();
    if (last != reverse(first) || !divides(g.label(first), cur.powers.back())) break;
    // Conjugate by the first traversal and apply the pinch across the ends.
    Int k = cur.powers.back() / g.label(first);
    GBSWord next;
    next.base = g.terminus(first);
    next.edges.assign(cur.edges.begin() + 1, cur.edges.end() - 1);
    next.powers.assign(cur.powers.begin() + 1, cur.powers.end() - 1);
    next.powers.back() += k * g.label(last);
    cur = britton_reduce(g, next).word;
  }
  return cur;
}

bool is_elliptic(const LabelledGraph& g, const GBSWord& w) { return cyclic_reduce(g, w).edges.empty(); }

Rational traversal_modulus(const LabelledGraph& g, HalfEdge h) {
  return make_rational(g.label(reverse(h)), g.label(h));
}

Rational modulus(const LabelledGraph& g, const GBSWord& w) {
  check_word(g, w);
  Rational out(1);
  for (HalfEdge h : w.edges) out *= traversal_modulus(g, h);
  out.canonicalize();
  return out;
}

GBSWord power(const LabelledGraph& g, const GBSWord& w, const Int& n) {
  GBSWord r = britton_reduce(g, w).word;
  if (n == 0) return GBSWord::identity(w.base);
  if (n < 0) return power(g, inverse(r), -n);
  // Conjugate of a vertex power: prefix, a^p, reversed prefix.
  size_t len = r.edges.size();
  if (len % 2 == 0) {
    size_t half = len / 2;
    bool conj = true;
    for (size_t i = 0; i < half && conj; ++i) {
      conj = r.edges[len - 1 - i] == reverse(r.edges[i]) && r.powers[i] == -r.powers[len - i];
    }
    if (conj) {
      GBSWord out = r;
      out.powers[half] *= n;
      return out;
    }
  }
  GBSWord result = GBSWord::identity(w.base);
  GBSWord base = r;
  Int e = n;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = britton_reduce(g, concat(result, base)).word;
    e /= 2;
    if (e > 0) base = britton_reduce(g, concat(base, base)).word;
  }
  return result;
}

Int segment_center_index(const Int& r0, const std::vector<Int>& q, const std::vector<Int>& r) {
  if (q.size() != r.size()) throw InputError("q and r must have the same length");
  if (r0 == 0) throw InputError("zero label");
  for (size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0 || r[i] == 0) throw InputError("zero label");
  }
  // a_0^{r0 t} reaches a_j as a_j^{c t / N_j}; each step forces q_j | c.
  Int n = 1;
  Int c = abs_int(r0);
  for (size_t j = 0; j < q.size(); ++j) {
    Int step = abs_int(q[j]) / gcd(c, q[j]);
    n *= step;
    c = c * step / abs_int(q[j]) * abs_int(r[j]);
  }
  return n;
}

std::string path_to_string(const LabelledGraph& g, const GBSWord& w) {
  std::string out;
  VertexId at = w.base;
  auto power_text = [&](VertexId v, const Int& p) {
    if (p == 0) return;
    if (!out.empty()) out += ' ';
    out += "a(" + g.vertex_name(v) + ")";
    if (p != 1) out += "^" + to_string(p);
  };
  power_text(at, w.powers[0]);
  for (size_t i = 0; i < w.edges.size(); ++i) {
    HalfEdge h = w.edges[i];
    if (!out.empty()) out += ' ';
    out += (h % 2 == 0 ? ">" : "<") + g.edge_name(edge_of(h));
    at = g.terminus(h);
    power_text(at, w.powers[i + 1]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace gbs
