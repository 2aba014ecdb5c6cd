#include <doctest.h>

#include <random>

#include "gbs/errors.hpp"
#include "gbs/number_theory.hpp"
#include "gbs/rational_group.hpp"

using namespace gbs;

TEST_CASE("gcd, lcm and divisibility") {
  CHECK(gcd(12, -18) == 6);
  CHECK(gcd(0, 5) == 5);
  CHECK(lcm(4, 6) == 12);
  CHECK(divides(3, -9));
  CHECK_FALSE(divides(4, 6));
  CHECK(sign(Int(-7)) == -1);
  CHECK(abs_int(-7) == 7);
  CHECK(ipow(-2, 5) == -32);
}

TEST_CASE("bezout coefficients satisfy the identity") {
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> d(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    Int a = d(rng), b = d(rng);
    Bezout bz = bezout(a, b);
    CHECK(bz.g == gcd(a, b));
    CHECK(bz.u * a + bz.v * b == bz.g);
  }
}

TEST_CASE("factorisation reconstructs the number") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<long> d(2, 2000000);
  for (int i = 0; i < 300; ++i) {
    Int n = d(rng);
    Int p = 1;
    Int last = 1;
    for (const auto& [q, e] : factorize(n)) {
      CHECK(is_prime(q));
      CHECK(q > last);
      CHECK(valuation(n, q) == e);
      p *= ipow(q, e);
      last = q;
    }
    CHECK(p == n);
  }
  CHECK(prime_divisors(-360) == std::vector<Int>{2, 3, 5});
}

TEST_CASE("least power divisible") {
  CHECK(min_power_divisible(8, 2) == 3u);
  CHECK(min_power_divisible(12, 6) == 2u);
  CHECK_FALSE(min_power_divisible(5, 6).has_value());
  CHECK(min_power_divisible(1, 7) == 1u);
}

TEST_CASE("strict integer parsing") {
  CHECK(parse_int("-42") == -42);
  CHECK(parse_int("+7") == 7);
  CHECK_THROWS_AS(parse_int("4x"), InputError);
  CHECK_THROWS_AS(parse_int(""), InputError);
  CHECK(to_string(make_rational(4, -6)) == "-2/3");
}

TEST_CASE("multiplicative groups of rationals") {
  RationalMultGroup g({make_rational(2, 3)});
  CHECK(g.contains(make_rational(4, 9)));
  CHECK(g.contains(make_rational(27, 8)));
  CHECK_FALSE(g.contains(make_rational(2, 1)));
  CHECK_FALSE(g.contains(Rational(-1)));
  CHECK(g.is_cyclic());
  RationalMultGroup two({Rational(2), Rational(3)});
  CHECK_FALSE(two.is_cyclic());
  CHECK(two.rank() == 2);
  RationalMultGroup pm({Rational(-1)});
  CHECK(pm.is_subgroup_of_pm1());
  CHECK(pm.contains_minus_one());
  CHECK(RationalMultGroup({Rational(4), Rational(6)}) == RationalMultGroup({Rational(4), make_rational(3, 2)}));
}

TEST_CASE("group membership is closed under products of generator powers") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(1, 30), ex(-3, 3);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> gens;
    for (int j = 0; j < 3; ++j) gens.push_back(make_rational((rng() & 1 ? 1 : -1) * num(rng), num(rng)));
    RationalMultGroup g(gens);
    Rational q = 1;
    for (const auto& x : gens) {
      int e = ex(rng);
      for (int k = 0; k < std::abs(e); ++k) q = e > 0 ? Rational(q * x) : Rational(q / x);
    }
    CHECK(g.contains(q));
  }
}
