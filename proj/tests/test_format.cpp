#include <doctest.h>

#include "abzeta/errors.hpp"
#include "abzeta/format.hpp"
#include "abzeta/xpoly.hpp"
#include "rng.hpp"

using namespace abzeta;

TEST_CASE("polynomials render grouped by powers of q") {
  CHECK(to_string(parse_poly("q^3 + (p+1)*q^2 + (p+1)*q + 1")) == "q^3 + (p+1)*q^2 + (p+1)*q + 1");
  CHECK(to_string(PolyPQ()) == "0");
  CHECK(to_string(PolyPQ(-7)) == "-7");
  CHECK(to_string(parse_poly("p^2 - 2*p")) == "p^2 - 2*p");
  CHECK(to_compact_string(parse_poly("q^2 + p*q")) == "q^2+p*q");
}

TEST_CASE("factored coefficient text") {
  const SignedText t = factored_text(parse_poly("-q*(q+1)"));
  CHECK(t.negative);
  CHECK(t.body == "q*(q+1)");
  const SignedText u = factored_text(parse_poly("2*p"));
  CHECK_FALSE(u.negative);
  CHECK(u.body == "2*p");
}

TEST_CASE("X-polynomials render in graded order") {
  XPolyPQ a(2);
  a.add_term({1, 1}, parse_poly("-q*(q+1)"));
  a.add_term({0, 0}, PolyPQ(1));
  a.add_term({1, 0}, PolyPQ::q());
  CHECK(to_string(a) == "1 + q*X1 - q*(q+1)*X1*X2");
}

TEST_CASE("parser") {
  CHECK(parse_poly("-(q^2 + (p + 1)*q + 1)*q") == parse_poly("-q^3 - p*q^2 - q^2 - q"));
  CHECK(parse_poly("p^-2*q") == PolyPQ::monomial(1, -2, 1));
  CHECK_THROWS_AS(parse_poly("2(p+1)"), DomainError);
  CHECK_THROWS_AS(parse_poly("q^-1"), DomainError);
  CHECK_THROWS_AS(parse_poly("(p+1"), DomainError);
  CHECK_THROWS_AS(parse_poly("x"), DomainError);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("4") == 4);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
}

TEST_CASE("text round trip on random polynomials") {
  testing::PolyGen gen(11);
  for (int i = 0; i < 300; ++i) {
    const PolyPQ a = gen.poly(5, 0, 4, 4);
    CHECK(parse_poly(to_string(a)) == a);
    CHECK(to_string(parse_poly(to_string(a))) == to_string(a));
  }
}
