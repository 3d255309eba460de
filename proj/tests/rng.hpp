#pragma once

#include <random>

#include "abzeta/poly.hpp"

namespace abzeta::testing {

// Small random polynomials for property tests; fixed seeds keep runs reproducible.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  PolyPQ poly(int max_terms = 4, int p_lo = -2, int p_hi = 3, int q_hi = 3) {
    PolyPQ a;
    const int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i) a.add_term(uniform(p_lo, p_hi), uniform(0, q_hi), uniform(-9, 9));
    return a;
  }

  PolyPQ nonzero(int max_terms = 4, int p_lo = -2, int p_hi = 3, int q_hi = 3) {
    for (;;) {
      PolyPQ a = poly(max_terms, p_lo, p_hi, q_hi);
      if (!a.is_zero()) return a;
    }
  }

 private:
  std::mt19937 rng_;
};

}  // namespace abzeta::testing
