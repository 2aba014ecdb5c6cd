#include "gbs/number_theory.hpp"

#include <cctype>

#include "gbs/errors.hpp"
#include "gbs/limits.hpp"

namespace gbs {

Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int ipow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

int sign(const Int& a) { return sgn(a); }

Bezout bezout(const Int& a, const Int& b) {
  Bezout out;
  mpz_gcdext(out.g.get_mpz_t(), out.u.get_mpz_t(), out.v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

Factorization factorize(const Int& n) {
  if (n == 0) throw InputError("cannot factor zero");
  Int m = abs_int(n);
  if (m > Int(static_cast<long>(limits().factor_cap))) {
    throw CapExceeded("factorisation cap exceeded for " + to_string(n));
  }
  unsigned long rest = m.get_ui();
  Factorization out;
  for (unsigned long p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(Int(p), e);
  }
  if (rest > 1) out.emplace_back(Int(rest), 1u);
  return out;
}

std::vector<Int> prime_divisors(const Int& n) {
  std::vector<Int> out;
  for (const auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

bool is_prime(const Int& n) {
  Int m = abs_int(n);
  if (m < 2) return false;
  auto f = factorize(m);
  return f.size() == 1 && f[0].second == 1;
}

unsigned valuation(const Int& n, const Int& p) {
  if (n == 0) throw InputError("valuation of zero");
  Int m = abs_int(n);
  unsigned e = 0;
  while (divides(p, m)) {
    m /= p;
    ++e;
  }
  return e;
}

std::optional<unsigned> min_power_divisible(const Int& d, const Int& base) {
  if (d == 0 || base == 0) return std::nullopt;
  Int ad = abs_int(d);
  if (ad == 1) return 1u;
  unsigned x = 1;
  for (const auto& [p, e] : factorize(ad)) {
    unsigned vb = divides(p, base) ? valuation(base, p) : 0;
    if (vb == 0) return std::nullopt;
    unsigned need = (e + vb - 1) / vb;
    if (need > x) x = need;
  }
  return x;
}

std::string to_string(const Int& a) { return a.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int parse_int(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("expected an integer, got '" + text + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw InputError("expected an integer, got '" + text + "'");
    }
  }
  std::string digits = text[0] == '+' ? text.substr(1) : text;
  return Int(digits, 10);
}

bool fits_long(const Int& a) { return a.fits_slong_p(); }

Rational make_rational(const Int& num, const Int& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gbs
