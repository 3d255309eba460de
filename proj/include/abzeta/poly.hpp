#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>

namespace abzeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exponent pair of p^u q^v. Ordered lexicographically by (v, u); this is the
/// canonical term order used everywhere, including text output.
struct Monomial {
  int v = 0;
  int u = 0;

  auto operator<=>(const Monomial&) const = default;
};

/// Univariate Laurent polynomial in p, keyed by exponent.
using LaurentP = std::map<int, Integer>;

/// Sparse Laurent polynomial in p and polynomial in q with integer
/// coefficients. Negative exponents are allowed for p only; the zero
/// polynomial has no terms and no stored coefficient is ever zero.
class PolyPQ {
 public:
  using TermMap = std::map<Monomial, Integer>;

  PolyPQ() = default;
  explicit PolyPQ(long c);
  explicit PolyPQ(const Integer& c);

  static PolyPQ monomial(const Integer& c, int u, int v);
  static PolyPQ p() { return monomial(1, 1, 0); }
  static PolyPQ q() { return monomial(1, 0, 1); }
  /// q p^c - 1, the scalar denominators produced by shifted parameters.
  static PolyPQ shifted_q_minus_one(int c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  Integer coeff(int u, int v) const;
  void add_term(int u, int v, const Integer& c);

  /// Largest q exponent; -1 for the zero polynomial.
  int q_degree() const;
  int min_q_exponent() const;
  int max_p_exponent() const;
  int min_p_exponent() const;
  /// Leading term in (v, u) order. Undefined on zero.
  std::pair<Monomial, Integer> leading() const;
  /// Coefficient of q^v as a Laurent polynomial in p.
  LaurentP q_coefficient(int v) const;
  /// Gcd of the absolute values of all coefficients (0 for zero).
  Integer content() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Substitutes q -> q p^d: (u, v) -> (u + d v, v).
  PolyPQ shift_q(int d) const;
  /// Substitutes q -> 1.
  PolyPQ at_q_one() const;
  PolyPQ times_monomial(const Integer& c, int u, int v) const;
  /// Divides every coefficient by d; the division must be exact.
  PolyPQ divide_integer(const Integer& d) const;

  PolyPQ operator-() const;
  PolyPQ& operator+=(const PolyPQ& o);
  PolyPQ& operator-=(const PolyPQ& o);
  PolyPQ& operator*=(const PolyPQ& o);

  friend PolyPQ operator+(PolyPQ a, const PolyPQ& b) { return a += b; }
  friend PolyPQ operator-(PolyPQ a, const PolyPQ& b) { return a -= b; }
  friend PolyPQ operator*(const PolyPQ& a, const PolyPQ& b);
  friend bool operator==(const PolyPQ& a, const PolyPQ& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

/// Exact quotient a / b, treating both as polynomials in q over Laurent
/// polynomials in p. Throws NotDivisible if b does not divide a.
PolyPQ divide_exact(const PolyPQ& a, const PolyPQ& b);

/// Exact quotient of univariate Laurent polynomials in p.
LaurentP divide_exact(const LaurentP& a, const LaurentP& b);

/// x^n for integer n (negative n requires x != 0).
Rational rational_pow(const Rational& x, long n);

/// Evaluates a at (p, q). p must be nonzero when a has negative p-exponents.
Rational eval_pq(const PolyPQ& a, const Rational& p, const Rational& q);

/// Fraction of two PolyPQ values. Content-normalized: the integer contents of
/// numerator and denominator are coprime and the denominator's leading term is
/// positive. No polynomial gcd is taken.
class RatPQ {
 public:
  RatPQ() : num_(), den_(1) {}
  explicit RatPQ(PolyPQ num);
  RatPQ(PolyPQ num, PolyPQ den);

  const PolyPQ& num() const { return num_; }
  const PolyPQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// The polynomial value; throws NotDivisible if den does not divide num.
  PolyPQ to_poly() const { return divide_exact(num_, den_); }

  RatPQ operator-() const;
  RatPQ& operator+=(const RatPQ& o);
  RatPQ& operator-=(const RatPQ& o);
  RatPQ& operator*=(const RatPQ& o);

  friend RatPQ operator+(RatPQ a, const RatPQ& b) { return a += b; }
  friend RatPQ operator-(RatPQ a, const RatPQ& b) { return a -= b; }
  friend RatPQ operator*(RatPQ a, const RatPQ& b) { return a *= b; }
  /// Equality as fractions (cross-multiplication).
  friend bool operator==(const RatPQ& a, const RatPQ& b);

 private:
  void normalize();

  PolyPQ num_;
  PolyPQ den_;
};

Rational eval_pq(const RatPQ& a, const Rational& p, const Rational& q);

}  // namespace abzeta
