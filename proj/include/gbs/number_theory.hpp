#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gbs {

using Int = mpz_class;
using Rational = mpq_class;

// Prime power factorisation: ascending primes with positive exponents.
using Factorization = std::vector<std::pair<Int, unsigned>>;

Int abs_int(const Int& a);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
bool divides(const Int& d, const Int& n);
Int ipow(const Int& base, unsigned long exponent);
int sign(const Int& a);

struct Bezout {
  Int g;  // gcd(a, b) >= 0
  Int u;  // u * a + v * b == g
  Int v;
};
Bezout bezout(const Int& a, const Int& b);

// Trial division; |n| must not exceed limits().factor_cap (CapExceeded otherwise).
Factorization factorize(const Int& n);
std::vector<Int> prime_divisors(const Int& n);
bool is_prime(const Int& n);
unsigned valuation(const Int& n, const Int& p);

// Smallest exponent x >= 1 such that d divides base^x, if any.
std::optional<unsigned> min_power_divisible(const Int& d, const Int& base);

std::string to_string(const Int& a);
std::string to_string(const Rational& q);
// Strict decimal parse with optional sign; throws InputError.
Int parse_int(const std::string& text);
bool fits_long(const Int& a);

Rational make_rational(const Int& num, const Int& den);

}  // namespace gbs
