#include "abzeta/format.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "abzeta/errors.hpp"

namespace abzeta {

namespace {

// c >= 0. Unit coefficient is dropped unless the monomial is 1.
std::string monomial_text(const Integer& c, int u, int v) {
  std::vector<std::string> parts;
  if (c != 1 || (u == 0 && v == 0)) parts.push_back(c.get_str());
  if (u == 1) {
    parts.emplace_back("p");
  } else if (u != 0) {
    parts.push_back("p^" + std::to_string(u));
  }
  if (v == 1) {
    parts.emplace_back("q");
  } else if (v > 1) {
    parts.push_back("q^" + std::to_string(v));
  }
  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += '*';
    out += s;
  }
  return out;
}

struct Piece {
  bool negative;
  std::string body;
};

void join(std::string& out, const Piece& piece, bool spaced) {
  if (out.empty()) {
    if (piece.negative) out += '-';
  } else if (spaced) {
    out += piece.negative ? " - " : " + ";
  } else {
    out += piece.negative ? '-' : '+';
  }
  out += piece.body;
}

std::string render(const PolyPQ& a, bool spaced) {
  if (a.is_zero()) return "0";
  const auto& terms = a.terms();
  const bool only_constant_group = a.q_degree() == 0;
  std::string out;
  if (only_constant_group) {
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const Integer mag = abs(it->second);
      join(out, {it->second < 0, monomial_text(mag, it->first.u, 0)}, spaced);
    }
    return out;
  }
  for (int v = a.q_degree(); v >= 0; --v) {
    const LaurentP group = a.q_coefficient(v);
    if (group.empty()) continue;
    if (group.size() == 1) {
      const auto& [u, c] = *group.begin();
      join(out, {c < 0, monomial_text(abs(c), u, v)}, spaced);
      continue;
    }
    const bool negative = group.rbegin()->second < 0;
    std::string inner;
    for (auto it = group.rbegin(); it != group.rend(); ++it) {
      const Integer c = negative ? Integer(-it->second) : it->second;
      join(inner, {c < 0, monomial_text(abs(c), it->first, 0)}, false);
    }
    std::string body = "(" + inner + ")";
    if (v > 0) body += "*" + monomial_text(1, 0, v);
    join(out, {negative, body}, spaced);
  }
  return out;
}

}  // namespace

std::string to_string(const PolyPQ& a) { return render(a, true); }

std::string to_compact_string(const PolyPQ& a) { return render(a, false); }

SignedText factored_text(const PolyPQ& a) {
  if (a.is_zero()) return {false, "0"};
  if (a.is_monomial()) {
    const auto& [mono, c] = *a.terms().begin();
    return {c < 0, monomial_text(abs(c), mono.u, mono.v)};
  }
  const bool negative = a.leading().second < 0;
  const Integer g = a.content();
  const int mu = a.min_p_exponent();
  const int mv = a.min_q_exponent();
  const PolyPQ rest = a.divide_integer(negative ? Integer(-g) : g).times_monomial(1, -mu, -mv);
  std::string body;
  if (g != 1) body += g.get_str() + "*";
  if (mu != 0 || mv != 0) body += monomial_text(1, mu, mv) + "*";
  body += "(" + to_compact_string(rest) + ")";
  return {negative, body};
}

std::string to_string(const RatPQ& a) {
  if (a.den() == PolyPQ(1)) return to_string(a.num());
  return "(" + to_compact_string(a.num()) + ")/(" + to_compact_string(a.den()) + ")";
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PolyPQ parse() {
    PolyPQ r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                      std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  PolyPQ expr() {
    PolyPQ r = term();
    for (;;) {
      if (accept('+')) {
        r += term();
      } else if (accept('-')) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  PolyPQ term() {
    PolyPQ r = unary();
    while (accept('*')) r *= unary();
    return r;
  }

  PolyPQ unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long exponent() {
    bool neg = accept('-');
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const long e = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -e : e;
  }

  PolyPQ power() {
    PolyPQ base = atom();
    if (!accept('^')) return base;
    const long e = exponent();
    if (e < 0) {
      if (!base.is_monomial()) fail("negative power of a non-monomial");
      const auto& [mono, c] = *base.terms().begin();
      if (mono.v != 0 || (c != 1 && c != -1)) fail("negative power must be of a p-monomial");
      const Integer sign = (c == -1 && (e % 2 != 0)) ? Integer(-1) : Integer(1);
      return PolyPQ::monomial(sign, static_cast<int>(mono.u * e), 0);
    }
    PolyPQ r(1);
    for (long i = 0; i < e; ++i) r *= base;
    return r;
  }

  PolyPQ atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      PolyPQ r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (c == 'p') {
      ++pos_;
      return PolyPQ::p();
    }
    if (c == 'q') {
      ++pos_;
      return PolyPQ::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return PolyPQ(Integer(std::string(text_.substr(start, pos_ - start))));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PolyPQ parse_poly(std::string_view text) { return Parser(text).parse(); }

Rational parse_rational(std::string_view text) {
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw DomainError("not a rational number: '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

}  // namespace abzeta
