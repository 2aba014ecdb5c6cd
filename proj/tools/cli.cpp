#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "catalog.hpp"
#include "gbs/bs_arith.hpp"
#include "gbs/embeddings.hpp"
#include "gbs/errors.hpp"
#include "gbs/graph_io.hpp"
#include "gbs/hom_constructions.hpp"
#include "gbs/hom_io.hpp"
#include "gbs/letters.hpp"
#include "gbs/modular.hpp"
#include "gbs/plateau.hpp"
#include "gbs/quotients.hpp"
#include "gbs/shape.hpp"
#include "gbs/word.hpp"

namespace gbs::cli {

namespace {

// Result of a subcommand: the JSON object and the same facts as text.
struct Report {
  Json json = Json::object();
  std::string text;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Json names(const LabelledGraph& g, const std::vector<VertexId>& vs) {
  Json a = Json::array();
  for (VertexId v : vs) a.push_back(g.vertex_name(v));
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

Report decision_report(const Decision& d) { return {decision_to_json(d), decision_to_text(d) + "\n"}; }

void attach_hom(Report& r, const HomCertificate& c, bool emit) {
  bool hom_ok = check_hom(c);
  bool epi_ok = hom_ok && c.has_witnesses() && check_epi(c);
  r.json["certificate_verified"] = hom_ok;
  r.json["surjectivity_verified"] = epi_ok;
  r.text += "certificate: homomorphism " + std::string(hom_ok ? "verified" : "FAILED") + ", surjectivity " +
            (epi_ok ? "verified" : "not verified") + "\n";
  if (emit) {
    r.json["certificate"] = certificate_to_json(c);
    r.text += certificate_to_json(c).dump(2) + "\n";
  }
}

void attach_embedding(Report& r, const EmbeddingCertificate& c, bool emit) {
  WadmReport rep = verify_embedding(c);
  r.json["certificate_verified"] = rep.ok;
  r.json["route"] = c.route;
  r.text += embedding_to_text(c) + "certificate: " + (rep.ok ? "verified" : "FAILED") + "\n";
  if (emit) {
    r.json["certificate"] = embedding_to_json(c);
    r.text += embedding_to_json(c).dump(2) + "\n";
  }
}

Report verify_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), 1, static_cast<int>(e.byte));
  }
  if (!j.contains("type") && j.contains("certificate")) j = j.at("certificate");
  Report r;
  std::vector<std::string> problems;
  Json violations = Json::array();
  std::string type = j.value("type", "");
  if (type == "embedding") {
    WadmReport rep = verify_embedding(embedding_from_json(j));
    for (const auto& v : rep.violations) {
      violations.push_back(violation_to_json(v));
      problems.push_back(v.location + ": " + v.message);
    }
  } else if (type == "hom") {
    HomCertificate c = certificate_from_json(j);
    problems = hom_failures(c);
    bool epi = false;
    if (problems.empty() && c.has_witnesses()) {
      std::vector<std::string> ef = epi_failures(c);
      epi = ef.empty();
      problems.insert(problems.end(), ef.begin(), ef.end());
    }
    r.json["surjective"] = epi;
    for (const auto& p : problems) violations.push_back(Json{{"location", "relation or witness"}, {"message", p}});
  } else {
    throw InputError("unknown certificate type '" + type + "'");
  }
  r.json["type"] = type;
  r.json["answer"] = problems.empty() ? "valid" : "invalid";
  r.json["violations"] = violations;
  r.text = std::string(problems.empty() ? "valid" : "invalid") + " " + type + " certificate\n";
  for (const auto& p : problems) r.text += "  " + p + "\n";
  return r;
}

std::string hopfian_reason(const Int& m, const Int& n) {
  if (abs_int(m) == 1 || abs_int(n) == 1) return "|m| = 1 or |n| = 1";
  if (prime_divisors(m) == prime_divisors(n)) return "m and n have the same prime divisors";
  return "m and n have different prime divisors";
}

std::string rf_reason(const Int& m, const Int& n) {
  if (abs_int(m) == 1 || abs_int(n) == 1) return "|m| = 1 or |n| = 1";
  if (abs_int(m) == abs_int(n)) return "|m| = |n|";
  return "|m| != |n| and neither is 1";
}

}  // namespace

Json decision_to_json(const Decision& d) {
  Json j = {{"answer", yes_no(d.answer)}, {"reason", d.reason}, {"caveat", d.caveat}};
  if (!d.details.empty()) j["details"] = d.details;
  if (d.caveat) j["caveat_text"] = d.caveat_text;
  return j;
}

std::string decision_to_text(const Decision& d) {
  std::string s = yes_no(d.answer) + ": " + d.reason;
  for (const auto& x : d.details) s += "\n  " + x;
  if (d.caveat) s += "\n  caveat: " + d.caveat_text;
  return s;
}

LabelledGraph graph_argument(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return load_graph(arg);
  std::istringstream is(arg);
  std::string head;
  is >> head;
  if (head == "bs") {
    std::string m, n, rest;
    if (!(is >> m >> n) || (is >> rest)) throw ParseError("expected 'bs M N'", 1, 1);
    return bs_graph(parse_int(m), parse_int(n));
  }
  std::string text = arg;
  for (char& c : text) {
    if (c == ';') c = '\n';
  }
  return parse_graph_text(text);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decision procedures and certificates for Baumslag-Solitar and GBS groups", "gbs_toolkit"};
  app.require_subcommand(1);
  bool json = false;
  bool emit = false;
  app.add_flag("--json", json, "print one JSON object");
  app.add_flag("--emit-cert", emit, "include certificates in the output");
  app.fallthrough();

  std::function<Report()> action;
  std::string g1, word_text, cert_path, only;
  std::vector<std::string> ints;
  int count = 5, chain_n = 1;
  bool up_to_sign = false, list = false;

  auto nums = [&](size_t k) {
    if (ints.size() != k) throw InputError("expected " + std::to_string(k) + " integers");
    std::vector<Int> v;
    for (const auto& s : ints) v.push_back(parse_int(s));
    for (const auto& x : v) {
      if (x == 0) throw InputError("parameters must be nonzero");
    }
    return v;
  };

  auto* graph = app.add_subcommand("graph", "reduce a graph and report its invariants");
  graph->add_option("graph", g1, "graph file, 'bs M N', or inline text")->required();
  graph->callback([&] {
    action = [&] {
      LabelledGraph g = graph_argument(g1);
      ReductionCertificates red = reduction_certificates(g);
      Shape sh = classify_shape(red.reduced);
      RationalMultGroup mod = modular_image(red.reduced);
      Report r;
      r.json = {{"vertices", g.num_vertices()},
                {"edges", g.num_edges()},
                {"reduced", graph_to_text(red.reduced)},
                {"shape", shape_to_string(sh)},
                {"modular_image", mod.to_string()},
                {"unimodular", is_unimodular(red.reduced)},
                {"nontrivial_center", has_nontrivial_center(red.reduced)},
                {"elementary", is_elementary(red.reduced)}};
      r.text = "reduced graph:\n" + graph_to_text(red.reduced) + "shape: " + shape_to_string(sh) +
               "\nmodular image: " + mod.to_string() + "\nunimodular: " + yes_no(is_unimodular(red.reduced)) +
               "\nnontrivial center: " + yes_no(has_nontrivial_center(red.reduced)) +
               "\nelementary: " + yes_no(is_elementary(red.reduced)) + "\n";
      attach_hom(r, red.forward, emit);
      return r;
    };
  });

  auto* rank = app.add_subcommand("rank", "rank of a GBS group via plateaus");
  rank->add_option("graph", g1)->required();
  rank->callback([&] {
    action = [&] {
      LabelledGraph g = graph_argument(g1);
      RankReport rr = mu(g);
      Report r;
      r.json = {{"beta", rr.beta}, {"mu", rr.mu}, {"rank", rr.rank}, {"hitting_set", names(g, rr.hitting_set)}};
      r.text = "rank " + std::to_string(rr.rank) + " = beta " + std::to_string(rr.beta) + " + mu " +
               std::to_string(rr.mu) + "\n";
      return r;
    };
  });

  auto* plat = app.add_subcommand("plateaus", "list the p-plateaus of a graph");
  plat->add_option("graph", g1)->required();
  plat->callback([&] {
    action = [&] {
      LabelledGraph g = graph_argument(g1);
      Report r;
      Json a = Json::array();
      for (const Plateau& p : all_plateaus(g)) {
        a.push_back({{"p", int_to_json(p.p)}, {"vertices", names(g, p.vertices)}});
        std::vector<std::string> vs;
        for (VertexId v : p.vertices) vs.push_back(g.vertex_name(v));
        r.text += "p=" + to_string(p.p) + ": {" + join(vs, ", ") + "}\n";
      }
      r.json["plateaus"] = a;
      if (r.text.empty()) r.text = "no plateaus\n";
      return r;
    };
  });

  // quot
  auto* quot = app.add_subcommand("quot", "quotients of Baumslag-Solitar groups");
  quot->require_subcommand(1);
  auto* q_sources = quot->add_subcommand("sources", "BS(m,n) mapping onto the group");
  q_sources->add_option("graph", g1)->required();
  q_sources->callback([&] {
    action = [&] {
      SourceSet s = bs_sources(graph_argument(g1));
      Shape sh;
      sh.kind = s.kind;
      return Report{{{"kind", sh.kind_name()}, {"sources", s.describe()}}, s.describe() + "\n"};
    };
  });
  auto* q_is = quot->add_subcommand("is-quotient", "is the group a quotient of BS(m,n)");
  q_is->add_option("graph", g1)->required();
  q_is->add_option("params", ints, "m n")->expected(2)->required();
  q_is->callback([&] {
    action = [&] {
      LabelledGraph g = graph_argument(g1);
      auto v = nums(2);
      Decision d = is_quotient_of_bs(g, v[0], v[1]);
      Report r = decision_report(d);
      if (d.answer) attach_hom(r, quotient_certificate(g, v[0], v[1]), emit);
      return r;
    };
  });
  auto* q_min = quot->add_subcommand("minimal", "does the group map onto its minimal BS source");
  q_min->add_option("graph", g1)->required();
  q_min->callback([&] {
    action = [&] {
      LabelledGraph g = graph_argument(g1);
      MinimalSource ms = minimal_bs_source(g);
      Decision d = maps_onto_minimal_bs(g);
      Report r = decision_report(d);
      r.json["minimal_source"] = {int_to_json(ms.m), int_to_json(ms.n)};
      r.json["segment"] = ms.segment;
      r.text = "minimal source BS(" + to_string(ms.m) + "," + to_string(ms.n) + ")\n" + r.text;
      if (d.answer && !ms.segment) attach_hom(r, minimal_bs_certificate(g), emit);
      return r;
    };
  });
  auto* q_epi = quot->add_subcommand("epi-equiv", "BS group epi-equivalent to the group");
  q_epi->add_option("graph", g1)->required();
  q_epi->callback([&] {
    action = [&] {
      auto p = epi_equivalent_bs(graph_argument(g1));
      Report r;
      r.json["answer"] = yes_no(p.has_value());
      if (p) {
        r.json["bs"] = {int_to_json(p->m), int_to_json(p->n)};
        r.text = "yes: BS(" + to_string(p->m) + "," + to_string(p->n) + ")\n";
      } else {
        r.text = "no\n";
      }
      return r;
    };
  });
  auto* q_fin = quot->add_subcommand("finite", "finitely many non-cyclic quotients up to isomorphism");
  q_fin->add_option("params", ints, "m n")->expected(2)->required();
  q_fin->callback([&] {
    action = [&] {
      auto v = nums(2);
      Report r = decision_report(finitely_many_quotients(v[0], v[1]));
      std::string rig = rigidity_name(quotient_rigidity(v[0], v[1]));
      r.json["rigidity"] = rig;
      r.text += "rigidity: " + rig + "\n";
      return r;
    };
  });
  auto* q_fam = quot->add_subcommand("family", "infinite family of 2-generated quotients");
  q_fam->add_option("params", ints, "m n")->expected(2)->required();
  q_fam->add_option("--count", count, "number of members")->check(CLI::Range(1, 12));
  q_fam->callback([&] {
    action = [&] {
      auto v = nums(2);
      Family f = infinite_family(v[0], v[1], count);
      Report r;
      r.json = {{"kind", f.kind}, {"parameters", f.parameters}};
      r.text = f.kind + " family, " + f.parameters + "\n";
      Json members = Json::array();
      for (const auto& m : f.members) {
        bool ok = check_hom(m.certificate) && m.certificate.has_witnesses() && check_epi(m.certificate);
        Json jm = {{"N", m.N}, {"graph", graph_to_text(m.graph)}, {"certificate_verified", ok}};
        if (emit) jm["certificate"] = certificate_to_json(m.certificate);
        members.push_back(jm);
        r.text += "N=" + std::to_string(m.N) + ": certificate " + (ok ? "verified" : "FAILED") + "\n";
      }
      r.json["members"] = members;
      return r;
    };
  });
  auto* q_chain = quot->add_subcommand("chain", "descending chain of quotients of BS(18,36)");
  q_chain->add_option("n", chain_n)->required()->check(CLI::Range(1, 12));
  q_chain->callback([&] {
    action = [&] {
      ChainLink l = descending_chain(chain_n);
      Report r;
      bool a = check_epi(l.from_source), b = check_epi(l.to_next), c = check_hom(l.to_target);
      r.json = {{"graph", graph_to_text(l.graph)}, {"from_source", a}, {"to_next", b}, {"to_target", c}};
      r.text = graph_to_text(l.graph) + "BS(18,36) -> G_n epi " + yes_no(a) + "\nG_n -> G_(n+1) epi " + yes_no(b) +
               "\nG_n -> BS(9,18) hom " + yes_no(c) + "\n";
      if (emit) r.json["certificate"] = certificate_to_json(l.from_source);
      return r;
    };
  });
  auto* q_large = quot->add_subcommand("large", "is the 2-generated group large");
  q_large->add_option("graph", g1)->required();
  q_large->callback([&] { action = [&] { return decision_report(is_large(graph_argument(g1))); }; });
  auto* q_rf = quot->add_subcommand("rf", "is the 2-generated group residually finite");
  q_rf->add_option("graph", g1)->required();
  q_rf->callback([&] { action = [&] { return decision_report(is_rf_gbs(graph_argument(g1))); }; });
  auto* q_bsq = quot->add_subcommand("bs-quotient", "does the group map onto a non-elementary BS group");
  q_bsq->add_option("graph", g1)->required();
  q_bsq->callback([&] {
    action = [&] {
      BSQuotientReport b = exists_bs_quotient(graph_argument(g1));
      Report r;
      r.json = {{"answer", yes_no(b.exists)}, {"elliptic_friendly", b.elliptic_friendly}};
      r.text = b.exists ? "yes" + std::string(b.elliptic_friendly ? ", elliptic generators stay elliptic" : "") + "\n"
                        : "no (except possibly the Klein bottle group)\n";
      return r;
    };
  });

  // bs
  auto* bs = app.add_subcommand("bs", "Baumslag-Solitar arithmetic");
  bs->require_subcommand(1);
  auto* b_hopf = bs->add_subcommand("hopfian", "is BS(m,n) Hopfian");
  b_hopf->add_option("params", ints, "m n")->expected(2)->required();
  b_hopf->callback([&] {
    action = [&] {
      auto v = nums(2);
      bool h = is_hopfian_bs(v[0], v[1]);
      return decision_report(h ? Decision::yes(hopfian_reason(v[0], v[1])) : Decision::no(hopfian_reason(v[0], v[1])));
    };
  });
  auto* b_epi = bs->add_subcommand("epi", "does BS(m,n) map onto BS(m2,n2)");
  b_epi->add_option("params", ints, "m n m2 n2")->expected(4)->required();
  b_epi->callback([&] {
    action = [&] {
      auto v = nums(4);
      bool e = exists_epi_bs(v[0], v[1], v[2], v[3]);
      return decision_report(e ? Decision::yes("(m,n) is a multiple of (m2,n2) or of (n2,m2), or the target is K")
                               : Decision::no("(m,n) is not a multiple of (m2,n2) or of (n2,m2)"));
    };
  });
  auto* b_emb = bs->add_subcommand("embeds", "does BS(r,s) embed in BS(m,n)");
  b_emb->add_option("params", ints, "r s m n")->expected(4)->required();
  b_emb->callback([&] {
    action = [&] {
      auto v = nums(4);
      if (abs_int(v[0]) == 1 && abs_int(v[1]) == 1) {
        Elementary which = v[0] == v[1] ? Elementary::Z2 : Elementary::K;
        bool e = embeds_elementary(which, v[2], v[3]);
        std::string name = which == Elementary::Z2 ? "Z^2" : "the Klein bottle group";
        return decision_report(e ? Decision::yes(name + " embeds") : Decision::no(name + " does not embed"));
      }
      Decision d = embeds_bs(v[0], v[1], v[2], v[3]);
      Report r = decision_report(d);
      if (d.answer && emit) attach_embedding(r, embed_bs_construct(v[0], v[1], v[2], v[3]), true);
      return r;
    };
  });
  auto* b_rf = bs->add_subcommand("rf", "is BS(m,n) residually finite");
  b_rf->add_option("params", ints, "m n")->expected(2)->required();
  b_rf->callback([&] {
    action = [&] {
      auto v = nums(2);
      bool h = is_rf_bs(v[0], v[1]);
      return decision_report(h ? Decision::yes(rf_reason(v[0], v[1])) : Decision::no(rf_reason(v[0], v[1])));
    };
  });
  auto* b_nh = bs->add_subcommand("nonhopf", "non-injective epimorphism of a non-Hopfian BS(m,n)");
  b_nh->add_option("params", ints, "m n")->expected(2)->required();
  b_nh->callback([&] {
    action = [&] {
      auto v = nums(2);
      NonHopfResult nh = non_hopf_endo(v[0], v[1]);
      Report r;
      LabelledGraph g = bs_graph(v[0], v[1]);
      SpanningTree t = spanning_tree(g, 0);
      bool kernel_nontrivial = !is_trivial(g, nh.kernel_witness);
      bool image_trivial = is_trivial(g, image_of_word(nh.phi, nh.kernel_witness));
      std::string w = word_to_string(g, t, nh.kernel_witness);
      r.json = {{"p", int_to_json(nh.p)}, {"kernel_witness", w}, {"witness_nontrivial", kernel_nontrivial},
                {"image_trivial", image_trivial}};
      r.text = "a -> a^" + to_string(nh.p) + ", t -> t\nkernel element " + w + ": nontrivial " +
               yes_no(kernel_nontrivial) + ", image trivial " + yes_no(image_trivial) + "\n";
      attach_hom(r, nh.phi, emit);
      return r;
    };
  });

  // embed
  auto* emb = app.add_subcommand("embed", "subgroups via weakly admissible maps");
  emb->require_subcommand(1);
  auto* e_check = emb->add_subcommand("check", "verify an embedding certificate");
  e_check->add_option("certificate", cert_path)->required();
  e_check->callback([&] { action = [&] { return verify_file(cert_path); }; });
  auto* e_con = emb->add_subcommand("construct", "certificate that BS(r,s) embeds in BS(m,n)");
  e_con->add_option("params", ints, "r s m n")->expected(4)->required();
  e_con->callback([&] {
    action = [&] {
      auto v = nums(4);
      if (abs_int(v[0]) == 1 && abs_int(v[1]) == 1) throw InputError("no construction for Z^2 or K; use bs embeds");
      Decision d = embeds_bs(v[0], v[1], v[2], v[3]);
      Report r = decision_report(d);
      if (d.answer) attach_embedding(r, embed_bs_construct(v[0], v[1], v[2], v[3]), true);
      return r;
    };
  });
  auto* e_nn = emb->add_subcommand("bsnn", "is the group a subgroup of BS(n,n)");
  e_nn->add_option("graph", g1)->required();
  e_nn->add_option("n", ints)->expected(0, 1);
  e_nn->add_flag("--up-to-sign", up_to_sign, "labels equal up to sign (BS(n,-n))");
  e_nn->callback([&] {
    action = [&] {
      LabelledGraph g = graph_argument(g1);
      Report r;
      auto some = embeds_in_some_bs_nn(g);
      r.json["some_n"] = some ? int_to_json(*some) : Json(nullptr);
      if (!ints.empty()) {
        Int n = parse_int(ints[0]);
        bool a = subgroup_of_bs_nn(g, n, up_to_sign);
        r.json["answer"] = yes_no(a);
        r.text = yes_no(a) + "\n";
      }
      r.text += some ? "least n: " + to_string(*some) + "\n" : "not a subgroup of any BS(n,n)\n";
      return r;
    };
  });
  auto* e_cont = emb->add_subcommand("contains", "does the group contain BS(m,n), m and n coprime");
  e_cont->add_option("graph", g1)->required();
  e_cont->add_option("params", ints, "m n")->expected(2)->required();
  e_cont->callback([&] {
    action = [&] {
      auto v = nums(2);
      bool a = contains_bs(graph_argument(g1), v[0], v[1]);
      return decision_report(a ? Decision::yes("m/n is in the modular image") : Decision::no("m/n is not in the modular image"));
    };
  });
  auto* e_circ = emb->add_subcommand("circle", "BS(X,Y) inside a circle group with X, Y coprime");
  e_circ->add_option("graph", g1)->required();
  e_circ->callback([&] {
    action = [&] {
      LabelledGraph g = graph_argument(g1);
      QRXY p = qrxy(classify_shape(g));
      Report r;
      r.json["answer"] = "yes";
      attach_embedding(r, circle_bs_subgroup(g, p.X, p.Y), emit);
      return r;
    };
  });
  auto* e_el = emb->add_subcommand("elementary", "does the group contain Z^2 or the Klein bottle group");
  e_el->add_option("graph", g1)->required();
  e_el->callback([&] {
    action = [&] {
      ElementaryContainment c = contains_z2_k(graph_argument(g1));
      Report r;
      r.json = {{"z2", c.z2}, {"k", decision_to_json(c.k)}};
      r.text = "Z^2: " + yes_no(c.z2) + "\nK: " + decision_to_text(c.k) + "\n";
      return r;
    };
  });

  auto* word = app.add_subcommand("word", "normal form of a word");
  word->add_option("graph", g1)->required();
  word->add_option("word", word_text, "letters a(v)^k and t(e)^k")->required();
  word->callback([&] {
    action = [&] {
      LabelledGraph g = graph_argument(g1);
      SpanningTree t = spanning_tree(g, 0);
      GBSWord w = parse_word(g, t, word_text);
      NormalForm nf = britton_reduce(g, w);
      Rational mod = modulus(g, w);
      bool ell = is_elliptic(g, w);
      Report r;
      r.json = {{"normal_form", word_to_string(g, t, nf.word)},
                {"trivial", nf.trivial},
                {"elliptic", ell},
                {"modulus", to_string(mod)}};
      r.text = "normal form: " + word_to_string(g, t, nf.word) + "\ntrivial: " + yes_no(nf.trivial) +
               "\nelliptic: " + yes_no(ell) + "\nmodulus: " + to_string(mod) + "\n";
      return r;
    };
  });

  int catalog_code = 0;
  auto* cat = app.add_subcommand("catalog", "run the worked-example catalog");
  cat->add_option("--only", only, "run entries whose id starts with this prefix");
  cat->add_flag("--list", list, "list entry ids");
  cat->callback([&] {
    action = [&] {
      Report r;
      if (list) {
        Json a = Json::array();
        for (const auto& e : catalog_entries()) {
          a.push_back({{"id", e.id}, {"description", e.description}});
          r.text += e.id + "  " + e.description + "\n";
        }
        r.json["entries"] = a;
        return r;
      }
      auto results = run_catalog(only);
      if (results.empty()) throw InputError("no catalog entry matches '" + only + "'");
      int failed = 0;
      for (const auto& x : results) {
        if (!x.passed) ++failed;
        r.text += std::string(x.passed ? "PASS " : "FAIL ") + x.id + "  " + x.description +
                  (x.passed ? "" : "\n     " + x.detail) + "\n";
      }
      r.text += std::to_string(results.size() - failed) + "/" + std::to_string(results.size()) + " passed\n";
      r.json = catalog_to_json(results);
      catalog_code = failed ? 1 : 0;
      return r;
    };
  });

  auto* verify = app.add_subcommand("verify", "verify a homomorphism or embedding certificate");
  verify->add_option("certificate", cert_path)->required();
  verify->callback([&] { action = [&] { return verify_file(cert_path); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, er;
    int code = app.exit(e, o, er);
    out << o.str();
    err << er.str();
    return code == 0 ? 0 : 1;
  }
  try {
    Report r = action();
    if (json) {
      out << r.json.dump() << '\n';
    } else {
      out << r.text;
    }
    return catalog_code;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace gbs::cli
