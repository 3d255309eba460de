#include "abzeta/sigma.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "abzeta/errors.hpp"

namespace abzeta {

std::vector<int> exponents_from_increments(const std::vector<int>& f) {
  std::vector<int> e(f.size());
  std::partial_sum(f.begin(), f.end(), e.begin());
  return e;
}

PolyPQ sigma_slow(std::vector<int> exponents) {
  std::sort(exponents.begin(), exponents.end());
  if (exponents.empty() || exponents.back() == 0) return PolyPQ(1);

  std::vector<int> lowered = exponents;
  --lowered.back();
  std::sort(lowered.begin(), lowered.end());
  exponents.pop_back();

  return sigma_slow(std::move(lowered)).times_monomial(1, 0, 1) + sigma_slow(std::move(exponents)).shift_q(1);
}

PolyPQ sigma_fast(const std::vector<int>& increments) {
  const PolyPQ q_minus_one = PolyPQ::shifted_q_minus_one(0);
  PolyPQ s(1);
  int log_order = 0;  // log_p |F_{m-1}|
  int ell = 0;
  for (int f : increments) {
    if (f < 0) throw DomainError("exponent increments must be nonnegative");
    ell += f;
    PolyPQ numerator = s.shift_q(-1).times_monomial(1, log_order, ell + 1) - s.shift_q(1);
    s = divide_exact(numerator, q_minus_one);
    log_order += ell;
  }
  return s;
}

PolyPQ sigma_closed(const std::vector<int>& increments) {
  const int r = static_cast<int>(increments.size());
  if (r == 0) return PolyPQ(1);
  for (int f : increments) {
    if (f < 0) throw DomainError("exponent increments must be nonnegative");
  }

  struct Term {
    PolyPQ numerator;                 // a signed monomial
    std::map<int, int> denominators;  // c -> multiplicity of (q p^c - 1)
  };
  std::vector<Term> terms;
  std::map<int, int> common;

  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    // bit t set <=> eps_t = -1 <=> eps*_t = 1
    auto star = [&](int t) { return static_cast<int>((mask >> t) & 1u); };
    auto eps = [&](int t) { return 1 - 2 * star(t); };

    int sign = 1;
    int q_exp = 0;
    int p_exp = 0;
    Term term;
    int tail_eps = 0;   // sum_{h > t} eps_h
    int tail_star = 0;  // sum_{h >= t} eps*_h
    for (int t = r - 1; t >= 0; --t) {
      tail_star += star(t);
      sign *= -eps(t);
      q_exp += star(t);
      p_exp += star(t) * tail_eps;
      ++term.denominators[tail_eps];

      const int weight = r - t;  // r - t + 1 with 1-based t
      const int f = increments[static_cast<std::size_t>(t)];
      q_exp += tail_star * f;
      p_exp += (weight * tail_star - tail_star * tail_star) * f;
      tail_eps += eps(t);
    }
    term.numerator = PolyPQ::monomial(sign, p_exp, q_exp);
    for (const auto& [c, k] : term.denominators) common[c] = std::max(common[c], k);
    terms.push_back(std::move(term));
  }

  std::map<std::pair<int, int>, PolyPQ> power_cache;
  auto factor_power = [&](int c, int k) -> const PolyPQ& {
    auto [it, inserted] = power_cache.try_emplace({c, k});
    if (inserted) {
      PolyPQ r(1);
      const PolyPQ f = PolyPQ::shifted_q_minus_one(c);
      for (int i = 0; i < k; ++i) r *= f;
      it->second = std::move(r);
    }
    return it->second;
  };

  PolyPQ sum;
  for (const auto& term : terms) {
    PolyPQ x = term.numerator;
    for (const auto& [c, k] : common) {
      auto it = term.denominators.find(c);
      const int have = it == term.denominators.end() ? 0 : it->second;
      if (k > have) x *= factor_power(c, k - have);
    }
    sum += x;
  }
  for (const auto& [c, k] : common) {
    const PolyPQ f = PolyPQ::shifted_q_minus_one(c);
    for (int i = 0; i < k; ++i) sum = divide_exact(sum, f);
  }
  return sum;
}

SigmaMethod parse_method(const std::string& name) {
  if (name == "oracle") return SigmaMethod::kOracle;
  if (name == "slow") return SigmaMethod::kSlow;
  if (name == "fast") return SigmaMethod::kFast;
  if (name == "closed") return SigmaMethod::kClosed;
  throw DomainError("unknown method '" + name + "'");
}

std::string method_name(SigmaMethod m) {
  switch (m) {
    case SigmaMethod::kOracle:
      return "oracle";
    case SigmaMethod::kSlow:
      return "slow";
    case SigmaMethod::kFast:
      return "fast";
    case SigmaMethod::kClosed:
      return "closed";
  }
  return "?";
}

PolyPQ sigma_poly(const GroupShape& shape, SigmaMethod method, const Integer& budget) {
  switch (method) {
    case SigmaMethod::kOracle:
      return order_profile(shape, budget).as_poly();
    case SigmaMethod::kSlow:
      return sigma_slow(shape.exponents());
    case SigmaMethod::kFast:
      return sigma_fast(shape.increments());
    case SigmaMethod::kClosed:
      return sigma_closed(shape.increments());
  }
  throw DomainError("unknown method");
}

Rational sigma_value(const GroupShape& shape, long a, SigmaMethod method, const Integer& budget) {
  if (method == SigmaMethod::kOracle) return sigma_oracle(shape, Rational(a), budget);
  const Rational p(shape.p());
  return eval_pq(sigma_poly(shape, method, budget), p, rational_pow(p, a));
}

}  // namespace abzeta
