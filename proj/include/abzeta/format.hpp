#pragma once

#include <string>
#include <string_view>

#include "abzeta/poly.hpp"

namespace abzeta {

/// Renders a polynomial grouped by descending powers of q, e.g.
/// `q^3 + (p+1)*q^2 + (p+1)*q + 1`. Output is deterministic and is the
/// golden-file text format.
std::string to_string(const PolyPQ& a);

/// Compact form without spaces, used inside parentheses.
std::string to_compact_string(const PolyPQ& a);

/// Coefficient rendering used in front of X-monomials: sign, integer content
/// and monomial content are pulled out, e.g. `-q*(q+1)` becomes
/// {negative = true, body = "q*(q+1)"}.
struct SignedText {
  bool negative = false;
  std::string body;
};
SignedText factored_text(const PolyPQ& a);

std::string to_string(const RatPQ& a);

std::string to_string(const Integer& z);
std::string to_string(const Rational& x);

/// Parses integer polynomial expressions in p and q built from + - * ^ and
/// parentheses, e.g. `-(q^2 + (p + 1)*q + 1)*q` or `p^-2*q`. Negative powers
/// are accepted on monomials with unit coefficient and no q. Throws
/// DomainError on malformed input.
PolyPQ parse_poly(std::string_view text);

/// Parses "a" or "a/b" with integer a, b.
Rational parse_rational(std::string_view text);

}  // namespace abzeta
