#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "gbs/errors.hpp"
#include "gbs/json_util.hpp"

using namespace gbs;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("graph arguments") {
  CHECK(cli::graph_argument("bs 2 3").num_edges() == 1);
  LabelledGraph g = cli::graph_argument("vertex a;vertex b;edge e a b 2 3");
  CHECK(g.num_vertices() == 2);
  CHECK_THROWS_AS(cli::graph_argument("vertex a;edge e a b 2 3"), ParseError);
}

TEST_CASE("BS deciders") {
  Json h = run_json({"bs", "hopfian", "2", "3"});
  CHECK(h["answer"] == "no");
  Json e = run_json({"bs", "embeds", "12", "20", "6", "10"});
  CHECK(e["answer"] == "no");
  CHECK(e["reason"] == "condition 2: p=2, alpha=1");
  CHECK(run_json({"bs", "embeds", "4", "9", "2", "3"})["answer"] == "yes");
  CHECK(run_json({"bs", "rf", "2", "4"})["answer"] == "no");
}

TEST_CASE("graph reports") {
  Json r = run_json({"rank", "bs 2 3"});
  CHECK(r["rank"] == 2);
  Run text = run({"graph", "bs 2 3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("circle") != std::string::npos);
}

TEST_CASE("words") {
  Json w = run_json({"word", "bs 2 3", "t(t) a(a)^2 t(t)^-1 a(a)^-3"});
  CHECK(w["trivial"] == true);
  Json t = run_json({"word", "bs 2 3", "t(t)"});
  CHECK(t["modulus"] == "2/3");
  CHECK(t["elliptic"] == false);
}

TEST_CASE("construct then verify") {
  Run c = run({"--json", "embed", "construct", "4", "9", "2", "3"});
  REQUIRE(c.code == 0);
  Json j = Json::parse(c.out);
  CHECK(j["certificate_verified"] == true);
  std::string path = "cli_test_certificate.json";
  {
    std::ofstream f(path);
    f << c.out;
  }
  Json v = run_json({"verify", path});
  CHECK(v["answer"] == "valid");
  j["certificate"]["core"]["vertices"][0]["multiplicity"] = 2;
  {
    std::ofstream f(path);
    f << j.dump();
  }
  Json bad = run_json({"verify", path});
  CHECK(bad["answer"] == "invalid");
  CHECK_FALSE(bad["violations"].empty());
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({"bs", "hopfian", "0", "3"}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"word", "bs 2 3", "b(a)"}).code == 1);
  CHECK(run_json({"embed", "construct", "12", "20", "6", "10"})["answer"] == "no");
  CHECK(run({"embed", "construct", "1", "1", "2", "3"}).code == 1);
  CHECK(run({"rank", "vertex a;vertex b;vertex c"}).code == 1);
}

TEST_CASE("catalog") {
  Json c = run_json({"catalog", "--only", "hopf"});
  CHECK(c.is_object());
  Run list = run({"catalog", "--list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("embed-trg") != std::string::npos);
}
