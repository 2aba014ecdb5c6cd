#include "gbs/bs_arith.hpp"

#include <set>

#include "gbs/errors.hpp"

namespace gbs {
namespace {

void require_nonzero(std::initializer_list<const Int*> values) {
  for (const Int* v : values) {
    if (*v == 0) throw InputError("Baumslag-Solitar parameters must be nonzero");
  }
}

bool is_unit(const Int& a) { return a == 1 || a == -1; }

bool is_multiple(const Int& m, const Int& n, const Int& m2, const Int& n2) {
  // (m, n) = c * (m2, n2) for an integer c.
  return m * n2 == n * m2 && divides(m2, m) && divides(n2, n);
}

}  // namespace

bool is_hopfian_bs(const Int& m, const Int& n) {
  require_nonzero({&m, &n});
  if (is_unit(m) || is_unit(n)) return true;
  return prime_divisors(m) == prime_divisors(n);
}

bool exists_epi_bs(const Int& m, const Int& n, const Int& m2, const Int& n2) {
  require_nonzero({&m, &n, &m2, &n2});
  if (is_multiple(m, n, m2, n2) || is_multiple(m, n, n2, m2)) return true;
  bool target_is_k = (m2 == 1 && n2 == -1) || (m2 == -1 && n2 == 1);
  return target_is_k && m == n && divides(Int(2), m);
}

std::optional<long> power_of_ratio(const Int& r, const Int& s, const Int& m, const Int& n) {
  require_nonzero({&r, &s, &m, &n});
  Rational rho = make_rational(r, s);
  Rational mu = make_rational(m, n);
  if (mu == 1) {
    if (rho == 1) return 0L;
    return std::nullopt;
  }
  if (mu == -1) {
    if (rho == 1) return 0L;
    if (rho == -1) return 1L;
    return std::nullopt;
  }
  std::set<Int> ps;
  for (const Int* v : {&r, &s, &m, &n}) {
    for (const auto& p : prime_divisors(*v)) ps.insert(p);
  }
  auto vq = [](const Rational& q, const Int& p) {
    long a = divides(p, q.get_num()) ? static_cast<long>(valuation(q.get_num(), p)) : 0;
    long b = divides(p, q.get_den()) ? static_cast<long>(valuation(q.get_den(), p)) : 0;
    return a - b;
  };
  std::optional<long> beta;
  for (const auto& p : ps) {
    long a = vq(mu, p);
    if (a == 0) continue;
    long b = vq(rho, p);
    if (b % a != 0) return std::nullopt;
    beta = b / a;
    break;
  }
  if (!beta) return std::nullopt;
  for (const auto& p : ps) {
    if (vq(rho, p) != *beta * vq(mu, p)) return std::nullopt;
  }
  int mu_sign = mu < 0 ? -1 : 1;
  int expected = (mu_sign == -1 && (*beta % 2 != 0)) ? -1 : 1;
  int rho_sign = rho < 0 ? -1 : 1;
  if (expected != rho_sign) return std::nullopt;
  return beta;
}

Decision embeds_bs(const Int& r, const Int& s, const Int& m, const Int& n) {
  require_nonzero({&r, &s, &m, &n});
  if (is_unit(r) && is_unit(s)) {
    throw InputError("elementary subgroup (r, s) = (+-1, +-1); use embeds_elementary");
  }
  Decision d;
  d.answer = true;
  auto fail = [&d](const std::string& why) {
    if (d.answer) d.reason = why;
    d.answer = false;
    d.details.push_back(why);
  };

  auto beta = power_of_ratio(r, s, m, n);
  if (!beta) {
    fail("condition 1: r/s is not a power of m/n");
  } else {
    d.details.push_back("condition 1: r/s = (m/n)^" + std::to_string(*beta));
  }

  std::set<Int> ps;
  for (const Int* v : {&r, &s, &m, &n}) {
    for (const auto& p : prime_divisors(*v)) ps.insert(p);
  }
  for (const auto& p : ps) {
    unsigned a = valuation(m, p);
    unsigned b = valuation(n, p);
    if (a != b) continue;
    if (valuation(r, p) > a || valuation(s, p) > a) {
      fail("condition 2: p=" + to_string(p) + ", alpha=" + std::to_string(a));
    }
  }

  if ((is_unit(m) || is_unit(n)) && !(is_unit(r) || is_unit(s))) {
    fail("condition 3: m or n is +-1 but neither r nor s is");
  }
  if (d.answer) d.reason = "conditions 1-3 hold";
  return d;
}

bool embeds_elementary(Elementary which, const Int& m, const Int& n) {
  require_nonzero({&m, &n});
  if (which == Elementary::Z2) return is_unit(m) == is_unit(n);
  if (m == -n) return true;
  if (divides(Int(2), m) && !is_unit(n)) return true;
  if (divides(Int(2), n) && !is_unit(m)) return true;
  return false;
}

bool is_rf_bs(const Int& m, const Int& n) {
  require_nonzero({&m, &n});
  return is_unit(m) || is_unit(n) || m == n || m == -n;
}

RationalMultGroup mult_group(const std::vector<Rational>& generators) {
  return RationalMultGroup(generators);
}

bool same_bs_params(const Int& m, const Int& n, const Int& m2, const Int& n2) {
  return (m == m2 && n == n2) || (m == -m2 && n == -n2) || (m == n2 && n == m2) ||
         (m == -n2 && n == -m2);
}

}  // namespace gbs
