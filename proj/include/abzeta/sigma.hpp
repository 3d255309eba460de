#pragma once

#include <string>
#include <vector>

#include "abzeta/group.hpp"
#include "abzeta/poly.hpp"

namespace abzeta {

/// e_i = f_1 + ... + f_i.
std::vector<int> exponents_from_increments(const std::vector<int>& f);

/// sigma as a polynomial S(p, q) with S(p, p^a) = sigma_a(F), from the
/// two-term recursion over sorted exponent vectors
///   S(F_r) = q S(G_r) + S(F_{r-1})(q p),
/// where F_{r-1} drops the largest exponent and G_r lowers it by one.
/// Exponential in sum(e); kept as the reference for benchmarking.
PolyPQ sigma_slow(std::vector<int> exponents);

/// sigma from the rank recursion
///   (q - 1) S(F_r) = q^{l+1} |F_{r-1}| S(F_{r-1})(q/p) - S(F_{r-1})(q p),
/// one exact division by (q - 1) per rank step.
PolyPQ sigma_fast(const std::vector<int>& increments);

/// sigma from the 2^r-term sign-vector closed formula, summed over a common
/// factored denominator and certified polynomial by exact division.
PolyPQ sigma_closed(const std::vector<int>& increments);

enum class SigmaMethod { kOracle, kSlow, kFast, kClosed };

SigmaMethod parse_method(const std::string& name);
std::string method_name(SigmaMethod m);

/// Polynomial for the formula-based methods. kOracle returns the order
/// profile as a polynomial in q (p fixed by the shape).
PolyPQ sigma_poly(const GroupShape& shape, SigmaMethod method, const Integer& budget = kDefaultBudget);

/// sigma_a(F) = S(p, p^a).
Rational sigma_value(const GroupShape& shape, long a, SigmaMethod method = SigmaMethod::kFast,
                     const Integer& budget = kDefaultBudget);

}  // namespace abzeta
