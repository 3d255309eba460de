#include <doctest.h>

#include "abzeta/errors.hpp"
#include "abzeta/format.hpp"
#include "abzeta/io.hpp"
#include "abzeta/series.hpp"
#include "abzeta/sigma.hpp"

using namespace abzeta;

namespace {

PolyPQ P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("w factors") {
  const WFactor plus = w_factor(1, 3);
  CHECK(plus.sign == -1);
  CHECK(plus.x_u == 0);
  CHECK(plus.x_v == 0);
  CHECK(plus.scalar() == RatPQ(PolyPQ(-1), PolyPQ::shifted_q_minus_one(3)));
  const WFactor minus = w_factor(-1, 2);
  CHECK(minus.scalar() == RatPQ(P("q*p^2"), P("q*p^2 - 1")));
  CHECK(minus.x_u == 2);
  CHECK(minus.x_v == 1);
  CHECK_THROWS_AS(w_factor(0, 0), DomainError);
  // w_+ + w_- at X = 0 sums to 1
  CHECK(w_factor(1, 0).scalar() + w_factor(-1, 0).scalar() == RatPQ(PolyPQ(1)));
}

TEST_CASE("B_r factor multisets") {
  CHECK(build_B(1) == FactorMultiset{{{1, 0, 0}, 1}, {{1, 1, 0}, 1}});
  CHECK(factors_to_string(build_B(2)) == "(1-X1)*(1-p*q*X1)*(1-q^2*X1)*(1-X2)*(1-q*X2)");
  for (int r = 1; r <= 5; ++r) {
    int n = 0;
    for (const auto& [f, k] : build_B(r)) {
      CHECK(f.u >= 0);
      n += k;
    }
    CHECK(n == r * (r + 3) / 2);
  }
}

TEST_CASE("low rank series") {
  const SeriesRat q0 = q_series_recursive(0);
  CHECK(q0.num == XPolyPQ::constant(0, PolyPQ(1)));
  CHECK(q0.den.empty());
  CHECK(normalize_to_B(q_series_recursive(1)) == XPolyPQ::constant(1, PolyPQ(1)));
  CHECK(normalize_to_B(q_series_direct(1)) == XPolyPQ::constant(1, PolyPQ(1)));

  XPolyPQ a2(2);
  a2.add_term({0, 0}, PolyPQ(1));
  a2.add_term({1, 0}, PolyPQ::q());
  a2.add_term({1, 1}, P("-q*(q+1)"));
  CHECK(normalize_to_B(q_series_recursive(2)) == a2);
  CHECK(normalize_to_B(q_series_direct(2)) == a2);
}

TEST_CASE("both routes agree") {
  for (int r = 1; r <= 3; ++r) {
    CAPTURE(r);
    CHECK(series_equal(q_series_direct(r), q_series_recursive(r)));
    CHECK(normalize_to_B(q_series_direct(r)) == normalize_to_B(q_series_recursive(r)));
  }
  SeriesRat shifted = q_series_direct(2);
  shifted.num.add_term({0, 0}, PolyPQ(1));
  CHECK_FALSE(series_equal(shifted, q_series_recursive(2)));
}

TEST_CASE("sum over the common denominator") {
  const SeriesRat s = q_series_recursive(2);
  const SeriesRat twice = sum_series({s, s});
  CHECK(series_equal(twice, sum_series({s, s})));
  CHECK_FALSE(series_equal(twice, s));
  CHECK(coeff_extract(twice, {1, 1}) == sigma_fast({1, 1}) * PolyPQ(2));
}

TEST_CASE("coefficients are sigma polynomials") {
  const SeriesRat s1 = q_series_recursive(1);
  for (int f = 0; f <= 5; ++f) {
    PolyPQ g;
    for (int k = 0; k <= f; ++k) g.add_term(0, k, 1);
    CHECK(coeff_extract(s1, {f}) == g);
  }
  const SeriesRat s2 = q_series_direct(2);
  CHECK(coeff_extract(s2, {1, 0}) == P("q^2+(p+1)*q+1"));
  for (int f1 = 0; f1 <= 3; ++f1)
    for (int f2 = 0; f2 <= 3; ++f2) CHECK(coeff_extract(s2, {f1, f2}) == sigma_fast({f1, f2}));
  const SeriesRat s3 = q_series_recursive(3);
  CHECK(coeff_extract(s3, {1, 1, 1}) == sigma_fast({1, 1, 1}));
  CHECK_THROWS_AS(coeff_extract(s3, {9, 0, 0}), BudgetExceeded);
  CHECK_THROWS_AS(coeff_extract(s3, {1, 0}), DomainError);
}

TEST_CASE("normalization rejects foreign denominators") {
  SeriesRat s = q_series_recursive(2);
  s.den[DenFactor{1, 5, 0}] += 1;
  CHECK_THROWS_AS(to_B_form(s), NotDivisible);
}

TEST_CASE("determinant specialization") {
  const DetSeries d3 = specialize_det(q_series_recursive(3), false);
  CHECK(d3.x_degree() == 11);
  CHECK(d3.num.at(4) == P("-(q^2 + (p+1)*q + 1)*q"));
  CHECK(d3.num.count(1) == 0);
  CHECK(d3.num.count(7) == 0);

  const DetSeries d4 = specialize_det(q_series_recursive(4), true);
  CHECK(d4.x_degree() == 26);
  CHECK(d4.num.at(26) == P("(7*p^3 + 5*p^2 + 8*p + 4)*p^6"));
  CHECK(d4.num.at(3) == P("2*p"));
  CHECK(d4.num.at(2) == PolyPQ(1));
  CHECK(d4.num.at(0) == PolyPQ(1));
  CHECK(d4.num.at(10) == P("-(3*p^5 + 2*p^4 + 8*p^3 - p^2 + 5*p + 9)"));
}

TEST_CASE("Dirichlet factors") {
  CHECK(dirichlet_p_factor(1, 0, 2, 2) == Rational(16, 9));
  CHECK(dirichlet_p_factor(1, 1, 2, 3) == Rational(32, 21));
  // rank 1: sum_f sigma_a(p^f) p^{-sf} at p = 3, a = 2, s = 4
  CHECK(dirichlet_p_factor(1, 2, 3, 4) == 1 / ((1 - Rational(1, 81)) * (1 - Rational(9, 81))));
  CHECK(dirichlet_p_factor(2, 0, 2, 3) > 1);
  CHECK_THROWS_AS(dirichlet_p_factor(2, 0, 2, Rational(1, 2)), NonIntegralPower);
  CHECK_THROWS_AS(dirichlet_p_factor(1, 0, 2, Rational(1, 3)), NonIntegralPower);
  CHECK_THROWS_AS(dirichlet_p_factor(1, 0, 2, 0), PoleHit);
  CHECK_THROWS_AS(dirichlet_p_factor(1, 2, 2, 2), PoleHit);
  CHECK_THROWS_AS(dirichlet_p_factor(1, 0, 6, 2), DomainError);
}
