#pragma once

#include <string>
#include <vector>

#include "gbs/number_theory.hpp"

namespace gbs {

// Finitely generated subgroup of the multiplicative group of nonzero
// rationals. Elements are encoded as exponent vectors over a sorted prime
// basis with one extra coordinate for the sign (taken mod 2). The lattice is
// kept in Hermite normal form, which makes membership and equality exact.
class RationalMultGroup {
 public:
  RationalMultGroup() = default;
  explicit RationalMultGroup(const std::vector<Rational>& generators);

  const std::vector<Rational>& generators() const { return generators_; }
  const std::vector<Int>& primes() const { return primes_; }
  // Rows of the normal form; the last column is the sign coordinate.
  const std::vector<std::vector<Int>>& basis() const { return hnf_; }

  bool contains(const Rational& q) const;
  bool is_trivial() const;
  // Rank of the free part (number of independent non-torsion generators).
  int rank() const;
  bool contains_minus_one() const { return contains(Rational(-1)); }
  bool is_cyclic() const;
  bool is_subgroup_of_pm1() const { return rank() == 0; }
  bool operator==(const RationalMultGroup& other) const;

  std::string to_string() const;

 private:
  std::vector<Rational> generators_;
  std::vector<Int> primes_;
  std::vector<std::vector<Int>> hnf_;
  std::vector<int> pivots_;

  bool encode(const Rational& q, std::vector<Int>& out) const;
};

// Row Hermite normal form over the integers; zero rows are dropped.
// Returns pivot columns alongside the rows.
std::vector<std::vector<Int>> hermite_normal_form(std::vector<std::vector<Int>> rows,
                                                  std::vector<int>* pivots = nullptr);

}  // namespace gbs
