#include <doctest.h>

#include "cytrans/errors.hpp"
#include "cytrans/univariate.hpp"
#include "support.hpp"

using namespace cytrans;
using testing::P;

TEST_CASE("number field arithmetic in Q(e), e^5 = 1") {
  auto K = testing::cyclotomic5();
  CHECK(K->degree() == 4);
  auto e = K->generator_element();
  CHECK(K->is_one(K->pow(e, 5)));
  CHECK_FALSE(K->is_one(K->pow(e, 4)));
  // 1 + e + e^2 + e^3 + e^4 = 0
  FieldElement s = K->zero();
  for (unsigned i = 0; i < 5; ++i) s = K->add(s, K->pow(e, i));
  CHECK(K->is_zero(s));
  auto a = K->add(e, K->from_rational(Rational(3, 2)));
  CHECK(K->is_one(K->mul(a, K->inv(a))));
  CHECK(K->div(a, a) == K->one());
}

TEST_CASE("reducible minimal polynomials are rejected") {
  // t^2 - 1 = (t-1)(t+1)
  CHECK_THROWS_AS(NumberField::make("t", {Rational(-1), Rational(0), Rational(1)}), DomainError);
  // t^4 + 4 = (t^2+2t+2)(t^2-2t+2)
  CHECK_THROWS_AS(NumberField::make("t", {Rational(4), 0, 0, 0, 1}), DomainError);
  // not monic
  CHECK_THROWS_AS(NumberField::make("t", {Rational(1), Rational(2)}), DomainError);
  CHECK_NOTHROW(NumberField::make("t", {Rational(-2), 0, 1}));
}

TEST_CASE("partial derivatives") {
  auto R = testing::ring({"x", "y", "z", "w"});
  auto f = P(R, "x^2 - y^2 - z^5 + w^5");
  CHECK(partial_derivative(f, 2) == P(R, "-5z^4"));
  CHECK(partial_derivative(P(R, "7/3"), 0).is_zero());
  CHECK_THROWS(partial_derivative(f, 4));

  auto S = testing::ring({"u", "x", "y"});
  auto g = P(S, "u(u-2x)(u-3y)(x^2-y^2)");
  // u(u-2x)(u-3y) = u^3 - 2x u^2 - 3y u^2 + 6xy u, differentiated by hand
  CHECK(partial_derivative(g, 0) == P(S, "(3u^2 - 4x u - 6y u + 6x y)(x^2 - y^2)"));
}

TEST_CASE("weighted homogeneity") {
  auto R = testing::ring({"x", "y", "z", "w"});
  auto f = P(R, "x^2 - y^2 - z^5 + w^5");
  std::vector<long> w{5, 5, 2, 2};
  CHECK(is_weighted_homogeneous(f, w) == 10);
  std::vector<long> ones{1, 1, 1, 1};
  CHECK_FALSE(is_weighted_homogeneous(f, ones).has_value());
  std::vector<long> odd{3, 1, 4, 7};
  CHECK(is_weighted_homogeneous(P(R, "x^2 y z^3 w"), odd) == 2 * 3 + 1 + 3 * 4 + 7);
  CHECK(is_weighted_homogeneous(Polynomial(R), odd) == 0);
}

TEST_CASE("substitution and charts") {
  auto R = testing::ring({"x0", "x1", "x2", "x3", "x4"});
  auto F = P(R, "x3*(x0^4 + 2*x1^4 - x2^4 + x3^4 + x1*x4^3) + x4*(x0^4 - x1^4 + 3*x2^4 + x4^4 + x2*x3^3)");
  auto chart = restrict_to_chart(F, 0);
  auto C = testing::ring({"x1", "x2", "x3", "x4"});
  CHECK(chart == P(C, "x3*(1 + 2*x1^4 - x2^4 + x3^4 + x1*x4^3) + x4*(1 - x1^4 + 3*x2^4 + x4^4 + x2*x3^3)"));
  CHECK(substitute(F, {}) == F);
  auto S = testing::ring({"x", "y"});
  auto xg = P(S, "x*(y^3 + x y + 4)");
  CHECK(substitute(xg, {{0, Polynomial(S)}}).is_zero());
  CHECK(substitute(P(S, "x + y"), {{0, P(S, "y^2")}}) == P(S, "y^2 + y"));
}

TEST_CASE("parse and print") {
  auto R = testing::ring({"x", "y", "z", "w"});
  CHECK(to_string(P(R, "x*y + 1/2 - 3y^2")) == "x*y - 3*y^2 + 1/2");
  CHECK(P(R, "(x+y)^2") == P(R, "x^2 + 2x y + y^2"));
  CHECK(P(R, "x/2") == P(R, "1/2 x"));
  CHECK_THROWS_AS(P(R, "x + q"), ParseError);
  CHECK_THROWS_AS(P(R, "x^"), ParseError);
  CHECK_THROWS_AS(P(R, "x / y"), ParseError);
  CHECK_THROWS_AS(P(R, "(x + y"), ParseError);

  auto K = testing::cyclotomic5();
  auto T = testing::ring({"z", "w"}, K);
  auto f = P(T, "(z - e*w)(z - e^4*w)");
  CHECK(P(T, to_string(f)) == f);
  // e + e^4 = -1 - e^2 - e^3
  CHECK(f.coefficient(Monomial::variable(0) * Monomial::variable(1)) ==
        K->neg(K->add(K->generator_element(), K->pow(K->generator_element(), 4))));
}

TEST_CASE("document format") {
  auto doc = parse_document(testing::data_text("ca4_germ.lm"));
  CHECK(doc.ring->size() == 4);
  REQUIRE(doc.polynomials.size() == 1);
  REQUIRE(doc.header("weights") != nullptr);
  auto again = parse_document(format_document(doc));
  CHECK(again.polynomials == doc.polynomials);
  CHECK(again.headers == doc.headers);
  CHECK_THROWS_AS(parse_document("x + y\n"), ParseError);
}

TEST_CASE("univariate gcd and squarefree part") {
  auto R = testing::ring({"t"});
  auto u = [&](const char* s) { return UnivariatePolynomial::from_polynomial(P(R, s), 0); };
  CHECK(gcd(u("t^3 - t"), u("t^2 - 2t + 1")) == u("t - 1"));
  CHECK(squarefree_part(u("(t-1)^3 (t+2)")) == u("(t-1)(t+2)"));
  CHECK(is_squarefree(u("t^6 - 1")));
  CHECK_FALSE(is_squarefree(u("t^6")));
  CHECK(u("3t^4").is_monomial());
}
