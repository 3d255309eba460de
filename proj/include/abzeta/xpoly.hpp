#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abzeta/format.hpp"
#include "abzeta/poly.hpp"

namespace abzeta {

using ExponentVector = std::vector<int>;

/// Polynomial in X_1..X_r with coefficients in a ring C (PolyPQ or RatPQ).
/// Every key has length exactly rank() and no stored coefficient is zero.
template <typename C>
class BasicXPoly {
 public:
  using TermMap = std::map<ExponentVector, C>;

  BasicXPoly() = default;
  explicit BasicXPoly(int rank) : rank_(rank) {}

  static BasicXPoly constant(int rank, C c) {
    BasicXPoly r(rank);
    r.add_term(ExponentVector(rank, 0), std::move(c));
    return r;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  C coeff(const ExponentVector& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? C() : it->second;
  }

  void add_term(const ExponentVector& g, const C& c) {
    if (static_cast<int>(g.size()) != rank_) throw std::invalid_argument("exponent vector length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Multiplies by (1 - alpha * X_k), k zero-based.
  BasicXPoly times_one_minus(const C& alpha, int k) const {
    BasicXPoly r = *this;
    C neg = -alpha;
    for (const auto& [g, c] : terms_) {
      ExponentVector h = g;
      ++h[k];
      r.add_term(h, c * neg);
    }
    return r;
  }

  BasicXPoly scaled(const C& s) const {
    BasicXPoly r(rank_);
    if (s.is_zero()) return r;
    for (const auto& [g, c] : terms_) r.add_term(g, c * s);
    return r;
  }

  template <typename F>
  BasicXPoly map_coefficients(F&& f) const {
    BasicXPoly r(rank_);
    for (const auto& [g, c] : terms_) r.add_term(g, f(g, c));
    return r;
  }

  BasicXPoly& operator+=(const BasicXPoly& o) {
    if (&o == this) return *this = scaled(C(PolyPQ(2)));
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  BasicXPoly& operator-=(const BasicXPoly& o) {
    if (&o == this) {
      terms_.clear();
      return *this;
    }
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }

  friend BasicXPoly operator+(BasicXPoly a, const BasicXPoly& b) { return a += b; }
  friend BasicXPoly operator-(BasicXPoly a, const BasicXPoly& b) { return a -= b; }
  friend bool operator==(const BasicXPoly& a, const BasicXPoly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

 private:
  int rank_ = 0;
  TermMap terms_;
};

using XPoly = BasicXPoly<RatPQ>;
using XPolyPQ = BasicXPoly<PolyPQ>;

/// Graded order used for rendering: total degree ascending, then exponent
/// vectors in descending lexicographic order (X1 before X2).
std::vector<const XPolyPQ::TermMap::value_type*> graded_terms(const XPolyPQ& a);

/// `1 + q*X1 - q*(q+1)*X1*X2`.
std::string to_string(const XPolyPQ& a);

/// Univariate polynomial in X with PolyPQ coefficients, ascending degree.
using UniXPoly = std::map<int, PolyPQ>;

/// `1 + X^2 + 2*p*X^3 + ...`.
std::string to_string(const UniXPoly& a);

}  // namespace abzeta
