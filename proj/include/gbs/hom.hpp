#pragma once

#include <string>
#include <vector>

#include "gbs/graph.hpp"
#include "gbs/moves.hpp"
#include "gbs/word.hpp"

namespace gbs {

// Node of a word expression over the source generators. Nodes form a DAG
// stored in a table; children always precede their parents.
struct ExprNode {
  enum Kind { Gen, Product, Power } kind = Gen;
  int gen = 0;                // Gen: source generator index
  std::vector<int> children;  // Product
  int child = -1;             // Power
  Int exp;                    // Power
};

class ExprTable {
 public:
  int gen(int g);
  int product(const std::vector<int>& parts);
  int power(int node, const Int& e);
  int inverse(int node) { return power(node, Int(-1)); }
  // Copies the expression `node` of `other`, replacing each generator g of
  // `other` by subst[g] of this table.
  int import(const ExprTable& other, int node, const std::vector<int>& subst);

  const std::vector<ExprNode>& nodes() const { return nodes_; }
  std::vector<ExprNode>& mutable_nodes() { return nodes_; }

 private:
  std::vector<ExprNode> nodes_;
};

// Homomorphism from pi_1(source, source_base) to pi_1(target, target_base)
// given on the standard generators of the breadth-first spanning trees.
struct HomCertificate {
  LabelledGraph source;
  LabelledGraph target;
  VertexId source_base = 0;
  VertexId target_base = 0;
  std::vector<GBSWord> images;  // per source generator, words over target
  ExprTable witness_nodes;
  // Per target generator: node whose image equals that generator, or -1.
  // Empty when no surjectivity witnesses are recorded.
  std::vector<int> witnesses;
  std::string provenance;
  std::vector<std::string> notes;

  SpanningTree source_tree() const { return spanning_tree(source, source_base); }
  SpanningTree target_tree() const { return spanning_tree(target, target_base); }
  Presentation source_presentation() const { return standard_presentation(source, source_tree()); }
  Presentation target_presentation() const { return standard_presentation(target, target_tree()); }
  bool has_witnesses() const;
};

HomCertificate make_hom(const LabelledGraph& source, VertexId source_base, const LabelledGraph& target,
                        VertexId target_base, std::vector<GBSWord> images, const std::string& provenance);
HomCertificate identity_certificate(const LabelledGraph& g, VertexId base = 0);

GBSWord image_of_letters(const HomCertificate& c, const LetterWord& letters);
GBSWord image_of_word(const HomCertificate& c, const GBSWord& w);

// Relators whose images are not trivial, as readable strings.
std::vector<std::string> hom_failures(const HomCertificate& c);
bool check_hom(const HomCertificate& c);

// Image of a witness node, reduced.
GBSWord evaluate_expr(const HomCertificate& c, int node);
// Target generators whose witness does not verify. Throws InputError when
// witnesses are missing.
std::vector<std::string> epi_failures(const HomCertificate& c);
bool check_epi(const HomCertificate& c);

// Fills in witnesses by Bezout closure, then a bounded breadth-first search
// over products of generator images. Returns true when every target
// generator is reached.
bool find_witnesses(HomCertificate& c, int depth = -1);

// Same map read at another target base: images are conjugated by the tree
// path from the new base to the old one. Witnesses are dropped.
HomCertificate rebase_target(const HomCertificate& c, VertexId base);

// second o first.
HomCertificate compose(const HomCertificate& first, const HomCertificate& second);
// Source equals target and every generator maps to itself.
bool fixes_generators(const HomCertificate& c);

// Morphism given vertex by vertex and edge by edge: a_v maps to the closed
// word vertex_image[v] at vmap[v], and the even half-edge of each edge to an
// open path from vmap of its origin to vmap of its terminus.
struct PathMap {
  std::vector<VertexId> vmap;
  std::vector<GBSWord> vertex_image;
  std::vector<GBSWord> edge_image;  // per edge, for its even half-edge
};
HomCertificate certificate_from_path_map(const LabelledGraph& source, const LabelledGraph& target,
                                         const PathMap& pm, const std::string& provenance);

// Epimorphism induced by a move applied to g. Witnesses included.
HomCertificate move_certificate(const LabelledGraph& g, const MoveResult& m);
// Inverse isomorphism for collapse, expansion and sign changes.
HomCertificate move_inverse_certificate(const LabelledGraph& g, const MoveResult& m);
HomCertificate contraction_epi(const LabelledGraph& g, EdgeId e);

struct ReductionCertificates {
  LabelledGraph reduced;
  std::vector<MoveRecord> moves;
  HomCertificate forward;   // g -> reduced
  HomCertificate backward;  // reduced -> g
};
ReductionCertificates reduction_certificates(const LabelledGraph& g);

// Images of elliptic generators are elliptic.
bool elliptic_generators_stay_elliptic(const HomCertificate& c);
// Stable letters keep their modulus (sign included).
bool stable_moduli_preserved(const HomCertificate& c);

}  // namespace gbs
