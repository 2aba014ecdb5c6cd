#pragma once

#include <optional>
#include <vector>

#include "gbs/decision.hpp"
#include "gbs/number_theory.hpp"
#include "gbs/rational_group.hpp"

namespace gbs {

// BS(m, n) = <a, t | t a^m t^-1 = a^n>.
struct BSParams {
  Int m;
  Int n;
};

enum class Elementary { Z2, K };

bool is_hopfian_bs(const Int& m, const Int& n);
bool exists_epi_bs(const Int& m, const Int& n, const Int& m2, const Int& n2);
// Requires (r, s) != (+-1, +-1); use embeds_elementary for those.
Decision embeds_bs(const Int& r, const Int& s, const Int& m, const Int& n);
bool embeds_elementary(Elementary which, const Int& m, const Int& n);
bool is_rf_bs(const Int& m, const Int& n);
// beta with r/s = (m/n)^beta, if one exists.
std::optional<long> power_of_ratio(const Int& r, const Int& s, const Int& m, const Int& n);
RationalMultGroup mult_group(const std::vector<Rational>& generators);

// True if BS(m, n) and BS(m2, n2) have the same parameters up to a common
// sign and swapping.
bool same_bs_params(const Int& m, const Int& n, const Int& m2, const Int& n2);

}  // namespace gbs
