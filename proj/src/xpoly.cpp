#include "abzeta/xpoly.hpp"

#include <algorithm>
#include <numeric>

namespace abzeta {

namespace {

void append_term(std::string& out, const PolyPQ& c, const std::string& xpart) {
  const SignedText t = factored_text(c);
  std::string body;
  if (xpart.empty()) {
    body = t.body;
  } else if (t.body == "1") {
    body = xpart;
  } else {
    body = t.body + "*" + xpart;
  }
  if (out.empty()) {
    if (t.negative) out += '-';
  } else {
    out += t.negative ? " - " : " + ";
  }
  out += body;
}

}  // namespace

std::vector<const XPolyPQ::TermMap::value_type*> graded_terms(const XPolyPQ& a) {
  std::vector<const XPolyPQ::TermMap::value_type*> out;
  out.reserve(a.size());
  for (const auto& kv : a.terms()) out.push_back(&kv);
  std::sort(out.begin(), out.end(), [](auto* x, auto* y) {
    const int dx = std::accumulate(x->first.begin(), x->first.end(), 0);
    const int dy = std::accumulate(y->first.begin(), y->first.end(), 0);
    if (dx != dy) return dx < dy;
    return x->first > y->first;
  });
  return out;
}

std::string to_string(const XPolyPQ& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto* kv : graded_terms(a)) {
    std::string xpart;
    for (std::size_t i = 0; i < kv->first.size(); ++i) {
      const int g = kv->first[i];
      if (g == 0) continue;
      if (!xpart.empty()) xpart += '*';
      xpart += "X" + std::to_string(i + 1);
      if (g > 1) xpart += "^" + std::to_string(g);
    }
    append_term(out, kv->second, xpart);
  }
  return out;
}

std::string to_string(const UniXPoly& a) {
  std::string out;
  for (const auto& [n, c] : a) {
    if (c.is_zero()) continue;
    std::string xpart;
    if (n == 1) {
      xpart = "X";
    } else if (n > 1) {
      xpart = "X^" + std::to_string(n);
    }
    append_term(out, c, xpart);
  }
  return out.empty() ? "0" : out;
}

}  // namespace abzeta
