#include <doctest.h>

#include "cytrans/errors.hpp"
#include "cytrans/singularity.hpp"
#include "cytrans/univariate.hpp"
#include "support.hpp"

using namespace cytrans;
using testing::P;

namespace {

RingPtr xyzw() { return testing::ring({"x", "y", "z", "w"}); }

LocalModel germ(const std::string& text) { return LocalModel(P(xyzw(), text)); }

UnivariatePolynomial lambda_poly(const std::string& text) {
  auto R = testing::ring({"l"});
  return UnivariatePolynomial::from_polynomial(P(R, text), 0);
}

}  // namespace

TEST_CASE("construction checks") {
  auto R = xyzw();
  CHECK_THROWS_AS(Hypersurface(P(R, "x^2 + y"), Ambient::projective()), DomainError);
  CHECK_NOTHROW(Hypersurface(P(R, "x^2 + y"), Ambient::affine()));
  CHECK_NOTHROW(Hypersurface(P(R, "x^2 + y"), Ambient::weighted({1, 2, 1, 1})));
  CHECK_THROWS_AS(Hypersurface(P(R, "x^2 + y"), Ambient::weighted({1, 1, 1, 1})), DomainError);
  CHECK_THROWS_AS(germ("x^2 + 1"), DomainError);
  CHECK_THROWS_AS(germ("x + y^2"), DomainError);
}

TEST_CASE("singular scheme of the quintic containing a plane") {
  auto h = parse_hypersurface(testing::data_text("quintic_with_plane.hsf"));
  auto gens = singular_scheme(h, 0);
  CHECK(gens.size() == 5);
  auto gb = buchberger(gens, MonomialOrder::degrevlex());
  const auto& C = gb.ring();
  // the locus lies on x3 = x4 = g = h = 0
  auto rad = zero_dimensional_radical(gb);
  CHECK(rad.contains(P(C, "x3")));
  CHECK(rad.contains(P(C, "x4")));
  CHECK(rad.contains(P(C, "1 + 2*x1^4 - x2^4")));
  CHECK(rad.contains(P(C, "1 - x1^4 + 3*x2^4")));
}

TEST_CASE("loci") {
  auto fermat = parse_hypersurface(testing::data_text("fermat_quintic.hsf"));
  for (std::size_t c = 0; c < 5; ++c) {
    auto gens = singular_scheme(fermat, c);
    CHECK(buchberger(gens, MonomialOrder::degrevlex()).is_unit());
  }
  auto r = analyze_singular_locus(fermat);
  CHECK(r.point_count == 0);
  CHECK(r.multiplicity_total == 0);

  auto plane = analyze_singular_locus(parse_hypersurface(testing::data_text("quintic_with_plane.hsf")));
  CHECK(plane.point_count == 16);
  CHECK(plane.multiplicity_total == 16);
  CHECK(plane.all_nodes);
  CHECK(plane.radical_certified);

  auto affine = Hypersurface(P(xyzw(), "x^2 + y^2 + z^2 + w^2"), Ambient::affine());
  auto a = analyze_singular_locus(affine);
  CHECK(a.point_count == 1);
  CHECK(a.all_nodes);
  CHECK(singular_scheme(affine, 0).size() == 5);

  CHECK_THROWS_AS(
      analyze_singular_locus(Hypersurface(P(xyzw(), "x^2 + y^4 + z^4 + w^4"), Ambient::weighted({2, 1, 1, 1}))),
      DomainError);
}

TEST_CASE("the ten cA4 points") {
  auto r = analyze_singular_locus(parse_hypersurface(testing::data_text("quintic_ca4.hsf")));
  CHECK(r.point_count == 10);
  CHECK(r.multiplicity_total == 160);
  CHECK_FALSE(r.all_nodes);
  CHECK_FALSE(r.radical_certified);
}

TEST_CASE("chart order does not change the count") {
  auto R = testing::ring({"a", "b", "c", "d", "e"});
  auto h = parse_hypersurface(testing::data_text("quintic_with_plane.hsf"));
  const auto& F = h.equation();
  // cyclically relabelled coordinates
  std::map<std::size_t, Polynomial> perm;
  const char* names[] = {"c", "d", "e", "a", "b"};
  for (std::size_t i = 0; i < 5; ++i) perm.emplace(i, P(R, names[i]));
  auto r = analyze_singular_locus(Hypersurface(substitute(F, perm), Ambient::projective()));
  CHECK(r.point_count == 16);
  CHECK(r.all_nodes);
}

TEST_CASE("Milnor and Tyurina numbers") {
  CHECK(milnor_number(germ("x^2 + y^2 + z^2 + w^2")) == 1);
  CHECK(milnor_number(germ("x^2 - y^2 - z^5 + w^5")) == 16);
  CHECK(milnor_number(germ("x^2 + y^2 + z^2 + w^3")) == 2);
  CHECK(tyurina_number(germ("x^2 - y^2 - z^5 + w^5")) == 16);
  CHECK(tyurina_number(germ("x^2 + y^2 + z^2 + w^2")) == 1);
  CHECK(tyurina_number(germ("x^2 + y^2 + z^2 + w^5")) == 4);
  CHECK(milnor_number(germ("x^2 + y^2 + z^2 + w^5")) == 4);
  auto R = testing::ring({"x", "y"});
  // critical points away from the origin are rejected
  CHECK_THROWS_AS(milnor_number(LocalModel(P(R, "x^5 + y^5 + x^2 y^2"))), DomainError);
  CHECK_THROWS_AS(milnor_number(germ("x^2 + y^2")), PositiveDimensional);
}

TEST_CASE("Milnor-Orlik") {
  CHECK(milnor_orlik_check(LocalModel(P(xyzw(), "x^2 - y^2 - z^5 + w^5"), std::vector<long>{5, 5, 2, 2})) == 16);
  CHECK(milnor_orlik_check(LocalModel(P(xyzw(), "x^2 + y^2 + z^2 + w^2"), std::vector<long>{1, 1, 1, 1})) == 1);
  CHECK(milnor_orlik_check(germ("x^2 - y^2 - z^5 + w^5")) == 16);
  auto R = testing::ring({"x", "y", "z"});
  LocalModel cubic(P(R, "x^3 + y^3 + z^3"), std::vector<long>{1, 1, 1});
  CHECK(milnor_orlik_check(cubic) == 8);
  CHECK(milnor_number(cubic) == 8);
  CHECK_FALSE(milnor_orlik_check(LocalModel(P(testing::ring({"x", "y"}), "x^5 + y^5 + x^2 y^2"))).has_value());
}

TEST_CASE("Hessian corank and cA type") {
  CHECK(hessian_corank(germ("x^2 + y^2 + z^2 + w^2")) == 0);
  CHECK(hessian_corank(germ("x^2 - y^2 - z^5 + w^5")) == 2);
  CHECK(hessian_corank(germ("x^2 + y^2 + z^2 + w^3")) == 1);
  CHECK(classify_cA(germ("x^2 + y^2 + z^2 + w^2")) == 1u);
  CHECK(classify_cA(germ("x^2 - y^2 - z^5 + w^5")) == 4u);
  auto namikawa = parse_local_model(testing::data_text("namikawa_germ.lm"));
  CHECK_FALSE(classify_cA(namikawa).has_value());
  CHECK(milnor_number(namikawa) == 4);
  auto inv = local_invariants(parse_local_model(testing::data_text("ca4_germ.lm")));
  CHECK(inv.milnor == 16);
  CHECK(inv.tyurina == 16);
  CHECK(inv.hessian_corank == 2);
  REQUIRE(inv.weighted_homogeneous);
}

TEST_CASE("Hessian determinant modulo an ideal") {
  auto R = testing::ring({"x", "y"});
  auto f = P(R, "x^2 y + y^3");
  auto H = hessian_matrix(f);
  REQUIRE(H.size() == 2);
  CHECK(H[0][1] == P(R, "2x"));
  auto gb = testing::gb_of(R, {"x - 1", "y - 2"});
  // det [[2y, 2x], [2x, 6y]] at (1, 2) = 48 - 4
  CHECK(determinant_modulo(H, gb) == P(R, "44"));
}

TEST_CASE("cuspidal fibres") {
  auto six = count_cuspidal_fibers(lambda_poly("l^6 - 1"));
  CHECK(six.distinct_roots == 6);
  CHECK(six.all_simple);
  auto one = count_cuspidal_fibers(lambda_poly("l^6"));
  CHECK(one.distinct_roots == 1);
  CHECK_FALSE(one.all_simple);
  auto four = count_cuspidal_fibers(lambda_poly("l^5 - l^3"));
  CHECK(four.distinct_roots == 4);
  CHECK_FALSE(four.all_simple);
  CHECK_THROWS_AS(count_cuspidal_fibers(lambda_poly("l^7 - 1")), DomainError);
  CHECK(count_common_cuspidal_points(lambda_poly("l^6 - 1"), lambda_poly("l^6 - 1")) == 6);
  CHECK(count_common_cuspidal_points(lambda_poly("l^6 - 1"), lambda_poly("l^6 - 2")) == 0);
}

TEST_CASE("report format") {
  auto h = parse_hypersurface(testing::data_text("quintic_with_plane.hsf"));
  auto text = format_report(analyze_singular_locus(h), h);
  CHECK(text.find("16 distinct singular points, all nodes: true") != std::string::npos);
  CHECK(report_csv_header() == "name,point_count,multiplicity_total,all_nodes,radical_certified");
}
