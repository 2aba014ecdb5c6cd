#include <doctest.h>

#include <random>

#include "gbs/bs_arith.hpp"
#include "gbs/errors.hpp"

using namespace gbs;

TEST_CASE("hopficity") {
  CHECK_FALSE(is_hopfian_bs(2, 3));
  CHECK(is_hopfian_bs(2, 4));
  CHECK(is_hopfian_bs(1, 5));
  CHECK_FALSE(is_hopfian_bs(4, 6));
  CHECK_FALSE(is_hopfian_bs(6, 10));
  CHECK(is_hopfian_bs(12, -18));
  CHECK_THROWS_AS(is_hopfian_bs(0, 3), InputError);
}

TEST_CASE("epimorphisms between BS groups") {
  CHECK(exists_epi_bs(18, 36, 9, 18));
  CHECK(exists_epi_bs(6, 10, 3, 5));
  CHECK(exists_epi_bs(6, 10, 5, 3));
  CHECK(exists_epi_bs(8, 8, 1, -1));
  CHECK_FALSE(exists_epi_bs(3, 3, 1, -1));
  CHECK_FALSE(exists_epi_bs(6, 10, 2, 3));
}

TEST_CASE("embedding decider") {
  Decision d = embeds_bs(12, 20, 6, 10);
  CHECK_FALSE(d.answer);
  CHECK(d.reason == "condition 2: p=2, alpha=1");
  CHECK(embeds_bs(4, 9, 2, 3).answer);
  CHECK_FALSE(embeds_bs(4, 4, 2, 2).answer);
  CHECK(embeds_bs(2, 2, 2, 2).answer);
  CHECK_FALSE(embeds_bs(2, 3, 3, 3).answer);
}

TEST_CASE("elementary subgroups") {
  CHECK_FALSE(embeds_elementary(Elementary::Z2, 1, 2));
  CHECK(embeds_elementary(Elementary::Z2, 2, 3));
  CHECK(embeds_elementary(Elementary::K, 3, -3));
  CHECK_FALSE(embeds_elementary(Elementary::K, 3, 5));
  CHECK(embeds_elementary(Elementary::K, 4, 5));
}

TEST_CASE("residual finiteness") {
  CHECK_FALSE(is_rf_bs(2, 4));
  CHECK(is_rf_bs(1, 6));
  CHECK(is_rf_bs(5, -5));
  CHECK(is_rf_bs(2, 2));
  CHECK_FALSE(is_rf_bs(2, 3));
}

TEST_CASE("power of ratio") {
  CHECK(power_of_ratio(4, 9, 2, 3) == 2L);
  CHECK(power_of_ratio(1, 1, 5, 7) == 0L);
  CHECK(power_of_ratio(2, 3, 3, 2) == -1L);
  CHECK_FALSE(power_of_ratio(2, 5, 2, 3).has_value());
}

TEST_CASE("embedding decider is invariant under swapping and common signs") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-12, 12);
  int checked = 0;
  while (checked < 2000) {
    int r = d(rng), s = d(rng), m = d(rng), n = d(rng);
    if (!r || !s || !m || !n || (std::abs(r) == 1 && std::abs(s) == 1)) continue;
    bool a = embeds_bs(r, s, m, n).answer;
    CHECK(a == embeds_bs(s, r, n, m).answer);
    CHECK(a == embeds_bs(-r, -s, m, n).answer);
    CHECK(a == embeds_bs(r, s, -m, -n).answer);
    ++checked;
  }
}

TEST_CASE("every BS group contains itself and is a quotient of itself") {
  for (int m = -9; m <= 9; ++m) {
    for (int n = -9; n <= 9; ++n) {
      if (!m || !n) continue;
      CHECK(exists_epi_bs(m, n, m, n));
      if (std::abs(m) != 1 || std::abs(n) != 1) CHECK(embeds_bs(m, n, m, n).answer);
    }
  }
}
