#include "abzeta/series.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "abzeta/errors.hpp"

namespace abzeta {

namespace {

PolyPQ factor_power(int c, int k) {
  PolyPQ r(1);
  const PolyPQ f = PolyPQ::shifted_q_minus_one(c);
  for (int i = 0; i < k; ++i) r *= f;
  return r;
}

std::string describe(const DenFactor& f) {
  return "(1 - p^" + std::to_string(f.u) + "*q^" + std::to_string(f.v) + "*X" + std::to_string(f.k) + ")";
}

XPolyPQ times_factor(const XPolyPQ& x, const DenFactor& f) {
  return x.times_one_minus(PolyPQ::monomial(1, f.u, f.v), f.k - 1);
}

// One branch of the recursion: Q_{m-1,a+eps}((p^{eps*(a+m-i)} X_i)_i) times
// w_eps(p^a, X_m), with Q_{m-1} given as a series in formal q = p^a.
SeriesRat recursion_branch(const SeriesRat& prev, int eps) {
  const int m = prev.rank + 1;
  const int star = (1 - eps) / 2;
  const WFactor w = w_factor(eps, 0);

  SeriesRat out;
  out.rank = m;
  out.num = XPolyPQ(m);
  for (const auto& [g, c] : prev.num.terms()) {
    int q_exp = w.q_exp;
    int p_exp = w.p_exp;
    for (int i = 1; i < m; ++i) {
      const int gi = g[static_cast<std::size_t>(i - 1)];
      q_exp += star * gi;
      p_exp += star * (m - i) * gi;
    }
    ExponentVector h = g;
    h.push_back(0);
    out.num.add_term(h, c.shift_q(eps).times_monomial(w.sign, p_exp, q_exp));
  }
  for (const auto& [c, k] : prev.scalar_den) out.scalar_den[c + eps] += k;
  ++out.scalar_den[w.den_shift];
  for (const auto& [f, k] : prev.den) {
    DenFactor g{f.k, f.v + star, f.u + eps * f.v + star * (m - f.k)};
    out.den[g] += k;
  }
  ++out.den[DenFactor{m, w.x_v, w.x_u}];
  return out;
}

SeriesRat negated(SeriesRat s) {
  s.num = s.num.map_coefficients([](const ExponentVector&, const PolyPQ& c) { return -c; });
  return s;
}

}  // namespace

PolyPQ SeriesRat::scalar_denominator() const {
  PolyPQ d(1);
  for (const auto& [c, k] : scalar_den) d *= factor_power(c, k);
  return d;
}

XPoly SeriesRat::numerator_rat() const {
  const PolyPQ d = scalar_denominator();
  XPoly out(rank);
  for (const auto& [g, c] : num.terms()) out.add_term(g, RatPQ(c, d));
  return out;
}

RatPQ WFactor::scalar() const {
  return RatPQ(PolyPQ::monomial(sign, p_exp, q_exp), PolyPQ::shifted_q_minus_one(den_shift));
}

WFactor w_factor(int eps, int shift) {
  if (eps != 1 && eps != -1) throw DomainError("eps must be +1 or -1");
  const int star = (1 - eps) / 2;
  WFactor w;
  w.sign = -eps;
  w.q_exp = star;
  w.p_exp = star * shift;
  w.den_shift = shift;
  w.x_u = star * shift;
  w.x_v = star;
  return w;
}

SeriesRat sum_series(const std::vector<SeriesRat>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty sum");
  const int r = terms.front().rank;
  FactorMultiset den;
  ScalarMultiset scal;
  for (const auto& t : terms) {
    if (t.rank != r) throw std::invalid_argument("rank mismatch in series sum");
    for (const auto& [f, k] : t.den) den[f] = std::max(den[f], k);
    for (const auto& [c, k] : t.scalar_den) scal[c] = std::max(scal[c], k);
  }

  std::map<std::pair<int, int>, PolyPQ> cache;
  auto power = [&](int c, int k) -> const PolyPQ& {
    auto [it, inserted] = cache.try_emplace({c, k});
    if (inserted) it->second = factor_power(c, k);
    return it->second;
  };

  SeriesRat out;
  out.rank = r;
  out.num = XPolyPQ(r);
  out.den = den;
  out.scalar_den = scal;
  for (const auto& t : terms) {
    PolyPQ missing(1);
    for (const auto& [c, k] : scal) {
      auto it = t.scalar_den.find(c);
      const int have = it == t.scalar_den.end() ? 0 : it->second;
      if (k > have) missing *= power(c, k - have);
    }
    XPolyPQ x = t.num.scaled(missing);
    for (const auto& [f, k] : den) {
      auto it = t.den.find(f);
      const int have = it == t.den.end() ? 0 : it->second;
      for (int i = have; i < k; ++i) x = times_factor(x, f);
    }
    out.num += x;
  }
  return out;
}

bool series_equal(const SeriesRat& a, const SeriesRat& b) {
  if (a.rank != b.rank) return false;
  return sum_series({a, negated(b)}).num.is_zero();
}

SeriesRat q_series_recursive(int r) {
  if (r < 0) throw DomainError("rank must be nonnegative");
  SeriesRat s;
  s.rank = 0;
  s.num = XPolyPQ::constant(0, PolyPQ(1));
  for (int m = 1; m <= r; ++m) s = sum_series({recursion_branch(s, 1), recursion_branch(s, -1)});
  return s;
}

SeriesRat q_series_direct(int r) {
  if (r < 1) throw DomainError("the sign-vector formula needs rank >= 1");
  std::vector<SeriesRat> terms;
  terms.reserve(std::size_t{1} << r);
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    auto star = [&](int t) { return static_cast<int>((mask >> (t - 1)) & 1u); };
    SeriesRat term;
    term.rank = r;
    int sign = 1;
    int q_exp = 0;
    int p_exp = 0;
    int tail_eps = 0;
    int tail_star = 0;
    for (int t = r; t >= 1; --t) {
      const int eps = 1 - 2 * star(t);
      tail_star += star(t);
      const WFactor w = w_factor(eps, tail_eps);
      sign *= w.sign;
      q_exp += w.q_exp;
      p_exp += w.p_exp;
      ++term.scalar_den[w.den_shift];
      const int weight = r - t + 1;
      ++term.den[DenFactor{t, tail_star, weight * tail_star - tail_star * tail_star}];
      tail_eps += eps;
    }
    term.num = XPolyPQ::constant(r, PolyPQ::monomial(sign, p_exp, q_exp));
    terms.push_back(std::move(term));
  }
  return sum_series(terms);
}

FactorMultiset build_B(int r) {
  if (r < 1) throw DomainError("B_r needs rank >= 1");
  FactorMultiset b;
  for (int t = 1; t <= r; ++t) {
    const int w = r - t + 1;
    for (int j = 0; j <= w; ++j) ++b[DenFactor{t, j, w * j - j * j}];
  }
  return b;
}

SeriesRat to_B_form(const SeriesRat& s) {
  const FactorMultiset b = build_B(s.rank);
  XPolyPQ x = s.num;
  for (const auto& [f, k] : s.den) {
    auto it = b.find(f);
    if (it == b.end() || it->second < k) {
      throw NotDivisible("denominator factor " + describe(f) + " does not divide B_" + std::to_string(s.rank));
    }
  }
  for (const auto& [f, k] : b) {
    auto it = s.den.find(f);
    const int have = it == s.den.end() ? 0 : it->second;
    for (int i = have; i < k; ++i) x = times_factor(x, f);
  }
  std::vector<PolyPQ> divisors;
  for (const auto& [c, k] : s.scalar_den) {
    for (int i = 0; i < k; ++i) divisors.push_back(PolyPQ::shifted_q_minus_one(c));
  }
  x = x.map_coefficients([&](const ExponentVector& g, const PolyPQ& c) {
    PolyPQ y = c;
    for (const auto& d : divisors) y = divide_exact(y, d);
    if (y.min_p_exponent() < 0) {
      std::string where;
      for (int gi : g) where += std::to_string(gi) + ",";
      throw NonIntegerCoefficient("coefficient of X^(" + where + ") has a negative power of p");
    }
    return y;
  });
  SeriesRat out;
  out.rank = s.rank;
  out.num = std::move(x);
  out.den = b;
  return out;
}

XPolyPQ normalize_to_B(const SeriesRat& s) { return to_B_form(s).num; }

PolyPQ coeff_extract(const SeriesRat& s, const std::vector<int>& f, int bound) {
  const int r = s.rank;
  if (static_cast<int>(f.size()) != r) throw DomainError("exponent vector length must equal the rank");
  int weight = 0;
  for (int t = 1; t <= r; ++t) {
    const int ft = f[static_cast<std::size_t>(t - 1)];
    if (ft < 0) throw DomainError("negative exponent");
    weight += (r - t + 1) * ft;
  }
  if (weight > bound) {
    throw BudgetExceeded("expansion weight " + std::to_string(weight) + " exceeds bound " + std::to_string(bound));
  }

  // h[k][n]: coefficient of X_k^n in prod over factors of 1 / (1 - alpha X_k)
  std::vector<std::vector<PolyPQ>> h(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    auto& hk = h[static_cast<std::size_t>(k)];
    hk.assign(static_cast<std::size_t>(f[static_cast<std::size_t>(k)] + 1), PolyPQ());
    hk[0] = PolyPQ(1);
    for (const auto& [fac, mult] : s.den) {
      if (fac.k != k + 1) continue;
      const PolyPQ alpha = PolyPQ::monomial(1, fac.u, fac.v);
      for (int i = 0; i < mult; ++i) {
        for (std::size_t n = 1; n < hk.size(); ++n) hk[n] += alpha * hk[n - 1];
      }
    }
  }

  PolyPQ acc;
  for (const auto& [g, c] : s.num.terms()) {
    PolyPQ term = c;
    for (int k = 0; k < r && !term.is_zero(); ++k) {
      const int gap = f[static_cast<std::size_t>(k)] - g[static_cast<std::size_t>(k)];
      if (gap < 0) {
        term = PolyPQ();
        break;
      }
      term *= h[static_cast<std::size_t>(k)][static_cast<std::size_t>(gap)];
    }
    acc += term;
  }
  for (const auto& [c, k] : s.scalar_den) {
    const PolyPQ d = PolyPQ::shifted_q_minus_one(c);
    for (int i = 0; i < k; ++i) acc = divide_exact(acc, d);
  }
  return acc;
}

int DetSeries::x_degree() const {
  int d = -1;
  for (const auto& [n, c] : num) {
    if (!c.is_zero()) d = std::max(d, n);
  }
  return d;
}

int DetSeries::p_degree() const {
  int d = 0;
  for (const auto& [n, c] : num) {
    if (!c.is_zero()) d = std::max(d, c.max_p_exponent());
  }
  return d;
}

DetSeries specialize_det(const SeriesRat& s, bool q_one) {
  const SeriesRat b = to_B_form(s);
  const int r = b.rank;
  DetSeries out;
  out.rank = r;
  for (const auto& [g, c] : b.num.terms()) {
    int n = 0;
    for (int t = 1; t <= r; ++t) n += (r - t + 1) * g[static_cast<std::size_t>(t - 1)];
    out.num[n] += q_one ? c.at_q_one() : c;
  }
  std::erase_if(out.num, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [f, k] : b.den) {
    out.den[DetFactor{r - f.k + 1, q_one ? 0 : f.v, f.u}] += k;
  }
  return out;
}

const XPolyPQ& series_numerator(int r) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<XPolyPQ>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[r];
  if (!slot) slot = std::make_unique<XPolyPQ>(normalize_to_B(q_series_recursive(r)));
  return *slot;
}

Rational dirichlet_p_factor(int r, long a, const Integer& p, const Rational& s) {
  if (r < 1) throw DomainError("rank must be >= 1");
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) throw DomainError("p is not prime");
  const Rational pr(p);
  const Rational q = rational_pow(pr, a);
  std::vector<Rational> x(static_cast<std::size_t>(r));
  for (int t = 1; t <= r; ++t) {
    const Rational e = -s * (r - t + 1);
    if (e.get_den() != 1) throw NonIntegralPower("p^(" + e.get_str() + ") is not rational");
    x[static_cast<std::size_t>(t - 1)] = rational_pow(pr, e.get_num().get_si());
  }

  Rational den = 1;
  for (const auto& [f, k] : build_B(r)) {
    const Rational v = 1 - rational_pow(pr, f.u) * rational_pow(q, f.v) * x[static_cast<std::size_t>(f.k - 1)];
    if (v == 0) throw PoleHit("factor " + describe(f) + " vanishes");
    den *= rational_pow(v, k);
  }

  Rational num = 0;
  for (const auto& [g, c] : series_numerator(r).terms()) {
    Rational term = eval_pq(c, pr, q);
    for (int t = 0; t < r; ++t) term *= rational_pow(x[static_cast<std::size_t>(t)], g[static_cast<std::size_t>(t)]);
    num += term;
  }
  return num / den;
}

}  // namespace abzeta
