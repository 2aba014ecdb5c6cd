#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbs/decision.hpp"
#include "gbs/graph.hpp"
#include "gbs/json_util.hpp"
#include "gbs/moves.hpp"
#include "gbs/wadm.hpp"

namespace gbs {

// Amalgam step recorded in a certificate. "aug1": BS(r,s) sits in
// BS(nu r, nu s) as the loop vertex of <a, b, t | a^nu = b, t b^r t^-1 = b^s>.
// "aug2": a hair labelled (nu, 1) added at `vertex` of index `index`, with
// index coprime to nu.
struct AugRecord {
  std::string kind;
  Int nu;
  Int index = 1;
  std::string vertex;
};

// BS(r, s) embeds in BS(m, n): an optional prefix map from the loop (r, s)
// into an amalgam graph, and a core weakly admissible map whose source has
// the same reduced loop as the prefix target (or as (r, s) without prefix) and
// whose target reduces to the loop (m, n). Traces are reduce() sequences.
struct EmbeddingCertificate {
  Int r, s, m, n;
  std::string route;
  std::optional<WeaklyAdmissibleMap> prefix;
  std::vector<MoveRecord> prefix_trace;
  WeaklyAdmissibleMap core;
  std::vector<MoveRecord> source_trace;
  std::vector<MoveRecord> target_trace;
  std::vector<AugRecord> aug;
  std::vector<std::string> notes;
};

WadmReport verify_embedding(const EmbeddingCertificate& c);

// (a, b) if g is a single vertex with a single loop labelled a, b.
std::optional<std::pair<Int, Int>> loop_labels(const LabelledGraph& g);

// BS(X, Y) inside the group of a reduced circle with X^Y = 1, via the
// three-block circle cover.
EmbeddingCertificate circle_bs_subgroup(const LabelledGraph& circle, const Int& m, const Int& n);
// m/n lies in the modular image. Requires m^n = 1, m != +-n and a
// non-elementary group.
bool contains_bs(const LabelledGraph& g, const Int& m, const Int& n);
// Certificate that BS(r, s) embeds in BS(m, n). Throws InputError if it does not.
EmbeddingCertificate embed_bs_construct(const Int& r, const Int& s, const Int& m, const Int& n);

// Labels at every vertex equal (or equal up to sign) and dividing n, after
// sign changes. The graph is reduced first. Requires n >= 2.
bool subgroup_of_bs_nn(const LabelledGraph& g, const Int& n, bool up_to_sign = false);
// Least n >= 2 with subgroup_of_bs_nn(g, n), if any.
std::optional<Int> embeds_in_some_bs_nn(const LabelledGraph& g);

struct ElementaryContainment {
  bool z2 = false;
  Decision k;
};
ElementaryContainment contains_z2_k(const LabelledGraph& g);

Json embedding_to_json(const EmbeddingCertificate& c);
EmbeddingCertificate embedding_from_json(const Json& j);
std::string embedding_to_text(const EmbeddingCertificate& c);

}  // namespace gbs
