#include <doctest.h>

#include <algorithm>

#include "cytrans/errors.hpp"
#include "cytrans/transition.hpp"
#include "support.hpp"

using namespace cytrans;

namespace {

TransitionRecord record(const std::string& file) { return parse_transition(testing::data_text(file)); }

std::array<long, 5> row(const Fingerprint& fp) { return {fp.b[2], fp.b[2], fp.b[3], fp.b[4], fp.chi}; }

const char* kTrivial = R"(name: trivial
type: conifold
[smoothing]
name: Q
betti: 1,0,1,204,1,0,1
chi: -200
h11: 1
h21: 101
[singular]
count: 0
milnor: 1
[resolution]
k: 0
)";

std::size_t count_code(const std::vector<Finding>& fs, const std::string& code) {
  return std::count_if(fs.begin(), fs.end(), [&](const Finding& f) { return f.code == code; });
}

}  // namespace

TEST_CASE("tree labels") {
  CHECK(parse_tree_label("A4").curves == 4);
  CHECK(parse_tree_label("D5").curves == 5);
  CHECK(parse_tree_label("E8").curves == 8);
  CHECK_THROWS_AS(parse_tree_label("D3"), ParseError);
  CHECK_THROWS_AS(parse_tree_label("E9"), ParseError);
  auto trees = parse_tree_list("6*A2, A1");
  CHECK(trees.size() == 7);
  CHECK(format_tree_list(parse_tree_list("10*A4")) == "10*A4");
}

TEST_CASE("table of the cA4 small transition") {
  auto table = compute_table(record("quintic_ca4.tr"));
  CHECK(row(table.resolution) == std::array<long, 5>{17, 17, 36, 17, 0});
  CHECK(row(table.singular) == std::array<long, 5>{1, 1, 60, 17, -40});
  CHECK(row(table.smoothing) == std::array<long, 5>{1, 1, 204, 1, -200});
  CHECK(table.resolution.h1_theta == 18);
  CHECK(table.singular.h1_theta == 17);
}

TEST_CASE("table of the conifold transition through 100 nodes") {
  auto table = compute_table(record("quintic_ca4_conifold.tr"));
  CHECK(row(table.singular) == std::array<long, 5>{1, 1, 120, 17, -100});
  CHECK(row(table.resolution) == std::array<long, 5>{17, 17, 36, 17, 0});
}

TEST_CASE("conifold through the quintic containing a plane") {
  auto t = record("quintic_plane.tr");
  auto table = compute_table(t);
  CHECK(table.smoothing.b[2] == 1);
  CHECK(table.resolution.b[2] == 2);
  const long N = t.singular.count, k = t.resolution.k;
  CHECK(table.resolution.b[3] == table.smoothing.b[3] - 2 * (N - k));
  CHECK(table.resolution.b[3] == 174);
  CHECK(table.singular.b[3] == 189);
}

TEST_CASE("empty transition leaves the variety unchanged") {
  auto table = compute_table(parse_transition(kTrivial));
  CHECK(table.resolution.b == table.smoothing.b);
  CHECK(table.singular.b == table.smoothing.b);
  CHECK(table.resolution.chi == table.smoothing.chi);
  CHECK(table.singular.chi == table.smoothing.chi);
}

TEST_CASE("type II fingerprints are echoed") {
  auto t = record("mt_to_mq.tr");
  auto table = compute_table(t);
  CHECK_FALSE(table.derived);
  CHECK(table.resolution == *t.resolution_fp);
  CHECK(table.singular == *t.singular_fp);
}

TEST_CASE("consistency findings") {
  auto ca4 = consistency_check(record("quintic_ca4.tr"));
  REQUIRE(ca4.size() == 1);
  CHECK(ca4[0].severity == Finding::Severity::warning);
  CHECK(ca4[0].message.find("h1Θ=18 vs expected h21=17") != std::string::npos);
  CHECK(count_code(consistency_check(record("namikawa.tr")), "h1_theta") == 0);
  for (const char* f : {"quintic_plane.tr", "mt_to_mq.tr", "mt_to_md.tr"}) CHECK(consistency_check(record(f)).empty());
  CHECK(count_code(consistency_check(record("quintic_ca4_conifold.tr")), "h1_theta") == 1);

  Fingerprint bad;
  bad.name = "bad";
  bad.b = {1, 0, 2, 10, 3, 0, 1};
  bad.chi = 2 - 10 + 2 + 3;
  auto fs = fingerprint_findings(bad);
  CHECK(std::any_of(fs.begin(), fs.end(), [](const Finding& f) { return f.severity == Finding::Severity::error; }));
}

TEST_CASE("simplicity verdicts") {
  auto plane = decide_simplicity(record("quintic_plane.tr"));
  CHECK(plane.kind == Verdict::Kind::simple);
  CHECK(plane.rule == "R1");
  auto t2 = decide_simplicity(record("mt_to_mq.tr"));
  CHECK(t2.kind == Verdict::Kind::not_simple);
  CHECK(t2.rule == "R2");
  auto nam = decide_simplicity(record("namikawa.tr"));
  CHECK(nam.to_string() == "NotSimple: violates necessary cohomological condition");
  CHECK(nam.rule == "R4");
  auto ca4 = decide_simplicity(record("quintic_ca4.tr"));
  CHECK(ca4.kind == Verdict::Kind::simple);
  CHECK(ca4.rule == "R5");
}

TEST_CASE("R3 and R6") {
  auto t = record("quintic_ca4.tr");
  t.witness.reset();
  auto unknown = decide_simplicity(t);
  CHECK(unknown.kind == Verdict::Kind::unknown);
  CHECK(unknown.rule == "R6");
  CHECK(unknown.missing == std::vector<std::string>{"splitting-family witness"});

  t.resolution_pi1 = "Z/5";
  auto r3 = decide_simplicity(t);
  CHECK(r3.kind == Verdict::Kind::not_simple);
  CHECK(r3.rule == "R3");
}

TEST_CASE("splitting family") {
  auto t = record("quintic_ca4.tr");
  REQUIRE(t.witness);
  auto v = verify_splitting_family(*t.witness);
  CHECK(v.verified);
  CHECK(v.report.point_count == 10);
  CHECK(v.report.all_nodes);

  auto zero = verify_splitting_family(*t.witness, std::map<std::string, FieldElement>{});
  CHECK_FALSE(zero.verified);
  CHECK(zero.report.point_count == 1);
  CHECK(zero.report.multiplicity_total == 16);

  auto R = testing::ring({"x", "y", "z", "w"});
  LocalModel node(testing::P(R, "x^2 + y^2 + z^2 + w^2"));
  SplittingFamily trivial(node, node.germ(), {}, {}, 1);
  CHECK(verify_splitting_family(trivial).verified);

  CHECK_THROWS_AS(SplittingFamily(node, testing::P(R, "x^2 + y^2 + z^2 + w^3"), {}, {}, 1), DomainError);
}

TEST_CASE("dimension of the image of lambda") {
  auto t = record("quintic_ca4.tr");
  CHECK(dim_image_lambda_report(t) == 1);
  CHECK(dim_image_lambda_report(record("namikawa.tr")) == 0);
  t.h1_theta_pair = std::make_pair(5L, 3L);
  CHECK_THROWS_AS(dim_image_lambda_report(t), InconsistentData);
  t.h1_theta_pair.reset();
  CHECK_FALSE(dim_image_lambda_report(t).has_value());
}

TEST_CASE("record parsing errors") {
  CHECK_THROWS_AS(parse_transition("name: x\ntype: small\n"), ParseError);
  CHECK_THROWS_AS(parse_transition(std::string(kTrivial) + "[bogus]\nx: 1\n"), ParseError);
  std::string odd = kTrivial;
  odd.replace(odd.find("1,0,1,204"), 9, "1,1,1,204");
  CHECK_THROWS_AS(parse_transition(odd), ParseError);
}

TEST_CASE("table csv") {
  CHECK(table_csv_header() == "variety,h1_theta,b2,rho,b3,b4,chi");
  auto table = compute_table(record("quintic_ca4.tr"));
  CHECK(table_csv_row(table.resolution) == "Qhat,18,17,17,36,17,0");
  CHECK(table_csv_row(table.singular) == "Qbar,17,1,1,60,17,-40");
}
