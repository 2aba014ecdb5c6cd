#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbs/decision.hpp"
#include "gbs/hom.hpp"
#include "gbs/shape.hpp"

namespace gbs {

// Baumslag-Solitar groups mapping onto a 2-generated GBS group.
// Segment: BS(m, m) with Q | m or R | m. Circle or lollipop: integral
// multiples of (QX, QY) and (QY, QX).
struct SourceSet {
  Shape::Kind kind = Shape::Other;
  Int Q, R;  // segment
  Int M, N;  // circle or lollipop: (QX, QY)
  bool contains(const Int& m, const Int& n) const;
  std::string describe() const;
};

// Reduced form of the input with its shape, after the checks shared by the
// quotient deciders.
struct PreparedGraph {
  LabelledGraph reduced;
  Shape shape;  // bc numbering
  bool is_K = false;
  bool is_Z = false;
};
PreparedGraph prepare(const LabelledGraph& g);

// Klein bottle group: loop labels (1, -1) or segment labels (+-2, +-2) after reduction.
bool is_klein_bottle(const LabelledGraph& reduced);

// Throws InputError when the group is not 2-generated, is Z, or is K.
SourceSet bs_sources(const LabelledGraph& g);
Decision is_quotient_of_bs(const LabelledGraph& g, const Int& m, const Int& n);
// BS(m, n) onto the input graph's group; check_epi passes.
HomCertificate quotient_certificate(const LabelledGraph& g, const Int& m, const Int& n);

struct MinimalSource {
  bool segment = false;
  Int m, n;  // (QX, QY), or (Q, R) for a segment: BS(Q, Q) and BS(R, R)
};
MinimalSource minimal_bs_source(const LabelledGraph& g);

// Whether the group maps onto BS(QX, QY). Throws InputError for segments.
Decision maps_onto_minimal_bs(const LabelledGraph& g);
// Epimorphism onto BS(QX, QY) from the input graph's group.
HomCertificate minimal_bs_certificate(const LabelledGraph& g);

struct BSPair {
  Int m, n;
};
std::optional<BSPair> epi_equivalent_bs(const LabelledGraph& g);

Decision finitely_many_quotients(const Int& m, const Int& n);

enum class Rigidity { AllNoncyclicIso, AllNonsolvableIso, Neither };
std::string rigidity_name(Rigidity r);
Rigidity quotient_rigidity(const Int& m, const Int& n);

// Large iff no BS(m, n) with m, n coprime maps onto the group. 2-generated input only.
Decision is_large(const LabelledGraph& g);
// Residually finite iff solvable or unimodular.
Decision is_rf_gbs(const LabelledGraph& g);

// True for Z, Z^2 and K.
bool is_elementary(const LabelledGraph& g);

struct BSQuotientReport {
  bool exists = false;  // false: none except possibly K
  bool elliptic_friendly = false;
};
BSQuotientReport exists_bs_quotient(const LabelledGraph& g);

struct ChainLink {
  LabelledGraph graph;            // G_n
  HomCertificate from_source;     // BS(18, 36) -> G_n
  HomCertificate to_next;         // G_n -> G_{n+1}
  HomCertificate to_target;       // G_n -> BS(9, 18)
};
ChainLink descending_chain(int n);

struct FamilyMember {
  int N = 0;
  LabelledGraph graph;
  HomCertificate certificate;  // BS(m, n) -> member
};
struct Family {
  std::string kind;        // "G_N", "H_N" or "segment"
  std::string parameters;  // chosen factorisation
  std::vector<FamilyMember> members;
};
// First `count` members of the infinite family of quotients. Throws
// InputError when BS(m, n) has finitely many GBS quotients.
Family infinite_family(const Int& m, const Int& n, int count);

}  // namespace gbs
