#include "gbs/rational_group.hpp"

#include <algorithm>
#include <set>

#include "gbs/errors.hpp"

namespace gbs {

std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows,
                                                  std::vector<int>* pivots) {
  std::vector<std::vector<Int>> out;
  std::vector<int> piv;
  if (rows.empty()) {
    if (pivots) pivots->clear();
    return out;
  }
  const std::size_t cols = rows[0].size();
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    // Euclid on column c among rows[top..].
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c] != 0 && (best == rows.size() || abs_int(rows[r][c]) < abs_int(rows[best][c]))) {
          best = r;
        }
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0) {
      for (auto& x : rows[top]) x = -x;
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t r = 0; r < top; ++r) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][c].get_mpz_t(), rows[top][c].get_mpz_t());
      if (q != 0) {
        for (std::size_t k = c; k < cols; ++k) rows[r][k] -= q * rows[top][k];
      }
    }
    piv.push_back(static_cast<int>(c));
    ++top;
  }
  rows.resize(top);
  if (pivots) *pivots = piv;
  return rows;
}

RationalMultGroup::RationalMultGroup(const std::vector<Rational>& generators)
    : generators_(generators) {
  std::set<Int> ps;
  for (const auto& g : generators_) {
    if (g == 0) throw InputError("zero is not a unit of Q*");
    for (const auto& p : prime_divisors(g.get_num())) ps.insert(p);
    for (const auto& p : prime_divisors(g.get_den())) ps.insert(p);
  }
  primes_.assign(ps.begin(), ps.end());
  std::vector<std::vector<Int>> rows;
  for (const auto& g : generators_) {
    std::vector<Int> v;
    encode(g, v);
    rows.push_back(v);
  }
  std::vector<Int> sign_row(primes_.size() + 1, Int(0));
  sign_row.back() = 2;
  rows.push_back(sign_row);
  hnf_ = hermite_normal_form(rows, &pivots_);
}

bool RationalMultGroup::encode(const Rational& q, std::vector<Int>& out) const {
  out.assign(primes_.size() + 1, Int(0));
  Int num = abs_int(q.get_num());
  Int den = q.get_den();
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    const Int& p = primes_[i];
    while (divides(p, num)) {
      num /= p;
      out[i] += 1;
    }
    while (divides(p, den)) {
      den /= p;
      out[i] -= 1;
    }
  }
  out.back() = q < 0 ? 1 : 0;
  return num == 1 && den == 1;
}

bool RationalMultGroup::contains(const Rational& q) const {
  if (q == 0) return false;
  std::vector<Int> v;
  if (!encode(q, v)) return false;
  for (std::size_t i = 0; i < hnf_.size(); ++i) {
    int c = pivots_[i];
    if (!divides(hnf_[i][c], v[c])) return false;
    Int f = v[c] / hnf_[i][c];
    if (f != 0) {
      for (std::size_t k = c; k < v.size(); ++k) v[k] -= f * hnf_[i][k];
    }
  }
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

bool RationalMultGroup::is_trivial() const {
  return rank() == 0 && !contains_minus_one();
}

int RationalMultGroup::rank() const {
  int r = 0;
  for (int c : pivots_) {
    if (c < static_cast<int>(primes_.size())) ++r;
  }
  return r;
}

bool RationalMultGroup::is_cyclic() const {
  int r = rank();
  if (r == 0) return true;
  return r == 1 && !contains_minus_one();
}

bool RationalMultGroup::operator==(const RationalMultGroup& other) const {
  for (const auto& g : other.generators_) {
    if (!contains(g)) return false;
  }
  for (const auto& g : generators_) {
    if (!other.contains(g)) return false;
  }
  return true;
}

std::string RationalMultGroup::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) s += ", ";
    s += gbs::to_string(generators_[i]);
  }
  return s + ">";
}

}  // namespace gbs
