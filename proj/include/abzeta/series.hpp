#pragma once

#include <compare>
#include <map>
#include <vector>

#include "abzeta/poly.hpp"
#include "abzeta/xpoly.hpp"

namespace abzeta {

/// The factor (1 - p^u q^v X_k), k in 1..r.
struct DenFactor {
  int k = 1;
  int v = 0;
  int u = 0;

  auto operator<=>(const DenFactor&) const = default;
};

/// Multiset of X-denominator factors, factor -> multiplicity.
using FactorMultiset = std::map<DenFactor, int>;
/// Multiset of scalar denominators (q p^c - 1), c -> multiplicity.
using ScalarMultiset = std::map<int, int>;

/// num / (prod (q p^c - 1) * prod (1 - p^u q^v X_k)). Denominators are kept
/// factored and never expanded.
struct SeriesRat {
  int rank = 0;
  XPolyPQ num;
  ScalarMultiset scalar_den;
  FactorMultiset den;

  /// prod over scalar_den.
  PolyPQ scalar_denominator() const;
  /// Numerator with the scalar denominator folded into RatPQ coefficients.
  XPoly numerator_rat() const;
};

/// w_eps at parameter q p^c:
///   -eps (q p^c)^{eps*} / (q p^c - 1) * 1 / (1 - (q p^c)^{eps*} X).
struct WFactor {
  int sign = 1;        // -eps
  int q_exp = 0;       // numerator monomial
  int p_exp = 0;
  int den_shift = 0;   // c in (q p^c - 1)
  int x_u = 0;         // X-factor (1 - p^{x_u} q^{x_v} X)
  int x_v = 0;

  RatPQ scalar() const;
};

WFactor w_factor(int eps, int shift);

/// Q_{r,a} by iterating the one-step recursion in the last variable,
/// combining the two branches over a common factored denominator.
SeriesRat q_series_recursive(int r);

/// Q_{r,a} as the sum of the 2^r sign-vector products.
SeriesRat q_series_direct(int r);

/// B_r = prod_{t=1}^r prod_{j=0}^{r-t+1} (1 - q^j p^{(r-t+1)j - j^2} X_t).
FactorMultiset build_B(int r);

/// Sum over the least common factored denominator.
SeriesRat sum_series(const std::vector<SeriesRat>& terms);

/// Equality as rational functions, by cross-multiplication.
bool series_equal(const SeriesRat& a, const SeriesRat& b);

/// Rewrites s over the denominator B_r with an empty scalar denominator.
/// Throws NotDivisible if a factor of s is not in B_r or the scalar
/// denominator does not divide, NonIntegerCoefficient if a coefficient has a
/// negative power of p.
SeriesRat to_B_form(const SeriesRat& s);

/// A_r = B_r * Q_{r,a}.
XPolyPQ normalize_to_B(const SeriesRat& s);

/// Default bound on sum_t (r - t + 1) f_t for coefficient extraction.
inline constexpr int kDefaultExpansionBound = 24;

/// Coefficient of X^f, by geometric expansion of every denominator factor.
PolyPQ coeff_extract(const SeriesRat& s, const std::vector<int>& f,
                     int bound = kDefaultExpansionBound);

/// (1 - p^u q^v X^w).
struct DetFactor {
  int w = 1;
  int v = 0;
  int u = 0;

  auto operator<=>(const DetFactor&) const = default;
};

struct DetSeries {
  int rank = 0;
  UniXPoly num;
  std::map<DetFactor, int> den;

  int x_degree() const;
  int p_degree() const;
};

/// Substitutes X_t -> X^{r-t+1} in the B_r form of s; with q_one also q -> 1.
DetSeries specialize_det(const SeriesRat& s, bool q_one);

/// A_r computed once per rank (recursive route) and cached; thread-safe.
const XPolyPQ& series_numerator(int r);

/// Q_{r,a} at q = p^a, X_t = p^{-s (r-t+1)}. Throws NonIntegralPower unless
/// s (r-t+1) is an integer for every t, PoleHit if a factor of B_r vanishes.
Rational dirichlet_p_factor(int r, long a, const Integer& p, const Rational& s);

}  // namespace abzeta
