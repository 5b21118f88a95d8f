#include <doctest.h>

#include <sstream>

#include "cytrans/cli.hpp"
#include "support.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cytrans");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cytrans::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

std::string d(const char* name) { return testing::data_path(name); }

}  // namespace

TEST_CASE("analyze") {
  auto r = cli({"analyze", d("quintic_with_plane.hsf")});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "16 distinct singular points, all nodes: true"));
  auto csv = cli({"analyze", d("quintic_with_plane.hsf"), "--csv"});
  CHECK(csv.out == "name,point_count,multiplicity_total,all_nodes,radical_certified\n"
                   "quintic_with_plane,16,16,true,true\n");
}

TEST_CASE("milnor") {
  auto r = cli({"milnor", d("ca4_germ.lm")});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("mu=16 tau=16\n"));
  CHECK(contains(r.out, "cA4"));
  CHECK(contains(cli({"milnor", d("namikawa_germ.lm")}).out, "cDV, type undetermined"));
}

TEST_CASE("transition table") {
  auto r = cli({"transition", d("quintic_ca4.tr"), d("quintic_ca4_conifold.tr"), "--table"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "variety,h1_theta,b2,rho,b3,b4,chi\n"
        "Qhat,18,17,17,36,17,0\n"
        "Qhat_alpha,18,17,17,36,17,0\n"
        "Qbar,17,1,1,60,17,-40\n"
        "Qbar_alpha,18,1,1,120,17,-100\n"
        "Q,101,1,1,204,1,-200\n");
  auto text = cli({"transition", d("quintic_ca4.tr")});
  CHECK(contains(text.out, "WARNING [h1_theta]"));
}

TEST_CASE("simplicity and split-verify") {
  auto r = cli({"simplicity", d("namikawa.tr")});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("NotSimple: violates necessary cohomological condition\n"));
  auto s = cli({"split-verify", d("quintic_ca4.tr")});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "total nodes: 10 x 10 = 100"));
  auto z = cli({"split-verify", d("quintic_ca4.tr"), "--values", "a=0,b=0,c=0"});
  CHECK(z.code == 1);
  CHECK(contains(z.out, "verified: false"));
}

TEST_CASE("web") {
  CHECK(cli({"web", "validate", d("example.web")}).code == 0);
  auto p = cli({"web", "path", d("example.web"), "M_Q", "M_D"});
  CHECK(contains(p.out, "2 arrows: T_Q, T_D"));
  auto dot = cli({"--dot", "web", "export", d("example.web")});
  CHECK(dot.out.starts_with("digraph web {"));
  auto dot_after = cli({"web", "export", d("example.web"), "--dot"});
  CHECK(dot_after.out == dot.out);
}

TEST_CASE("cusps") {
  auto r = cli({"cusps", d("weierstrass.txt")});
  CHECK(contains(r.out, "6 cuspidal fibres, all simple: true"));
  CHECK(contains(r.out, "II×II points: 6"));
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"analyze"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  auto missing = cli({"milnor", "/nonexistent.lm"});
  CHECK(missing.code == 1);
  CHECK(contains(missing.err, "error:"));
  CHECK(cli({"--budget", "1", "analyze", d("quintic_with_plane.hsf")}).code == 1);
}
