#include <doctest.h>

#include "abzeta/errors.hpp"
#include "abzeta/format.hpp"
#include "abzeta/poly.hpp"
#include "rng.hpp"

using namespace abzeta;

namespace {

PolyPQ P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("addition cancels and keeps canonical form") {
  CHECK(P("p + q") + P("-q") == PolyPQ::p());
  CHECK(PolyPQ() + P("q^2+1") == P("q^2+1"));
  CHECK((P("q^2+q+1") + P("q*p*(q+1)")) == P("q^2 + (p+1)*q + p*q^2 + 1"));
  PolyPQ a = P("3*p*q - 2");
  a -= a;
  CHECK(a.is_zero());
  CHECK(a.size() == 0);
}

TEST_CASE("multiplication") {
  CHECK((P("q^2+1") * PolyPQ()).is_zero());
  CHECK(P("q-1") * P("q+1") == P("q^2-1"));
  CHECK(P("q-1") * P("q^3+q^2+q+1+q*p*(q+1)") == P("q^4-1+q*p*(q^2-1)"));
  CHECK(P("p^-1") * PolyPQ::p() == PolyPQ(1));
}

TEST_CASE("shift_q substitutes q -> q p^d") {
  CHECK(PolyPQ::q().shift_q(1) == P("q*p"));
  CHECK(P("q^2").shift_q(-1) == P("q^2*p^-2"));
  CHECK(P("1+q").shift_q(-1) == P("1+q*p^-1"));
  CHECK(P("q^3*p") * P("1+q*p^-1") == P("q^3*p+q^4"));
  CHECK(P("5").shift_q(7) == PolyPQ(5));
}

TEST_CASE("exact division") {
  CHECK(divide_exact(P("q^2-1"), P("q-1")) == P("q+1"));
  CHECK(divide_exact(P("q^4-1+q*p*(q^2-1)"), P("q-1")) == P("q^3+q^2+q+1+q*p*(q+1)"));
  CHECK_THROWS_AS(divide_exact(P("q-1"), P("q+1")), NotDivisible);
  CHECK_THROWS_AS(divide_exact(P("q"), PolyPQ()), DomainError);
  CHECK(divide_exact(PolyPQ(), P("q+p")).is_zero());
  // Laurent p in the divisor's leading coefficient
  CHECK(divide_exact(P("q^2*p - p^-1"), P("q*p - 1")) == P("q + p^-1"));
  CHECK_THROWS_AS(divide_exact(P("q^2"), P("2*q")), NotDivisible);
}

TEST_CASE("queries") {
  const PolyPQ a = P("q^3 + (p+1)*q^2 + 2*p^-1");
  CHECK(a.q_degree() == 3);
  CHECK(PolyPQ().q_degree() == -1);
  CHECK(a.min_q_exponent() == 0);
  CHECK(a.max_p_exponent() == 1);
  CHECK(a.min_p_exponent() == -1);
  CHECK(a.coeff(-1, 0) == 2);
  CHECK(a.coeff(5, 5) == 0);
  CHECK(a.q_coefficient(2) == LaurentP{{0, Integer(1)}, {1, Integer(1)}});
  CHECK(P("6*q + 4*p").content() == 2);
  CHECK(a.at_q_one() == P("p + 2 + 2*p^-1"));
}

TEST_CASE("evaluation") {
  const PolyPQ s = P("q^2 + (p+1)*q + 1");
  CHECK(eval_pq(s, 2, 1) == 5);
  CHECK(eval_pq(s, 2, 2) == 11);
  CHECK(eval_pq(s, 2, 0) == 1);
  CHECK(eval_pq(P("p^-2*q"), 2, 3) == Rational(3, 4));
  CHECK_THROWS_AS(eval_pq(P("p^-1"), 0, 1), PoleHit);
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("rational functions") {
  const RatPQ a(P("q"), P("q-1"));
  CHECK((a + (-a)).is_zero());
  CHECK(RatPQ(PolyPQ(1), P("q-1")) + RatPQ(PolyPQ(1), P("1-q")) == RatPQ());
  CHECK(RatPQ(P("q^2-1"), P("q-1")).to_poly() == P("q+1"));
  CHECK_THROWS_AS(RatPQ(P("q"), P("q-1")).to_poly(), NotDivisible);
  CHECK(RatPQ(P("2*q"), P("-4")) == RatPQ(P("-q"), P("2")));
  CHECK(RatPQ(P("2*q"), P("-4")).den() == PolyPQ(2));
  CHECK(eval_pq(a, 2, 3) == Rational(3, 2));
  CHECK_THROWS_AS(eval_pq(a, 2, 1), PoleHit);
}

TEST_CASE("ring axioms hold on random polynomials") {
  testing::PolyGen gen(20240611);
  for (int i = 0; i < 300; ++i) {
    const PolyPQ a = gen.poly();
    const PolyPQ b = gen.poly();
    const PolyPQ c = gen.poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == PolyPQ());
    CHECK(a * PolyPQ(1) == a);
  }
}

TEST_CASE("division inverts multiplication") {
  testing::PolyGen gen(7);
  for (int i = 0; i < 200; ++i) {
    const PolyPQ a = gen.poly();
    const PolyPQ b = gen.nonzero();
    CHECK(divide_exact(a * b, b) == a);
  }
}

TEST_CASE("shift inverse and evaluation homomorphism") {
  testing::PolyGen gen(99);
  for (int i = 0; i < 200; ++i) {
    const PolyPQ a = gen.poly();
    const PolyPQ b = gen.poly();
    const int d = gen.uniform(-3, 3);
    CHECK(a.shift_q(d).shift_q(-d) == a);
    CHECK((a * b).shift_q(d) == a.shift_q(d) * b.shift_q(d));
    const Rational p(gen.uniform(1, 5), gen.uniform(1, 4));
    const Rational q(gen.uniform(-4, 4), gen.uniform(1, 3));
    CHECK(eval_pq(a * b, p, q) == eval_pq(a, p, q) * eval_pq(b, p, q));
    CHECK(eval_pq(a + b, p, q) == eval_pq(a, p, q) + eval_pq(b, p, q));
    CHECK(eval_pq(a.shift_q(d), p, q) == eval_pq(a, p, q * rational_pow(p, d)));
  }
}

TEST_CASE("rational arithmetic agrees with evaluation") {
  testing::PolyGen gen(3);
  for (int i = 0; i < 100; ++i) {
    const RatPQ x(gen.poly(3, 0, 2, 2), PolyPQ::q() + PolyPQ(gen.uniform(2, 5)));
    const RatPQ y(gen.poly(3, 0, 2, 2), PolyPQ::q() - PolyPQ(gen.uniform(2, 5)) * PolyPQ::p());
    const Rational p = 3;
    const Rational q(1, 7);
    CHECK(eval_pq(x + y, p, q) == eval_pq(x, p, q) + eval_pq(y, p, q));
    CHECK(eval_pq(x * y, p, q) == eval_pq(x, p, q) * eval_pq(y, p, q));
    CHECK(x * y == y * x);
  }
}
