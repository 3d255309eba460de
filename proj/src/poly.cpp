#include "abzeta/poly.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "abzeta/errors.hpp"

namespace abzeta {

PolyPQ::PolyPQ(long c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, Integer(c));
}

PolyPQ::PolyPQ(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{0, 0}, c);
}

PolyPQ PolyPQ::monomial(const Integer& c, int u, int v) {
  if (v < 0) throw DomainError("negative q exponent");
  PolyPQ r;
  if (c != 0) r.terms_.emplace(Monomial{v, u}, c);
  return r;
}

PolyPQ PolyPQ::shifted_q_minus_one(int c) {
  PolyPQ r = monomial(1, c, 1);
  r.add_term(0, 0, -1);
  return r;
}

Integer PolyPQ::coeff(int u, int v) const {
  auto it = terms_.find(Monomial{v, u});
  return it == terms_.end() ? Integer(0) : it->second;
}

void PolyPQ::add_term(int u, int v, const Integer& c) {
  if (c == 0) return;
  if (v < 0) throw DomainError("negative q exponent");
  auto [it, inserted] = terms_.try_emplace(Monomial{v, u}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int PolyPQ::q_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.v; }

int PolyPQ::min_q_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first.v; }

int PolyPQ::max_p_exponent() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.u);
  return terms_.empty() ? 0 : m;
}

int PolyPQ::min_p_exponent() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [mono, c] : terms_) m = std::min(m, mono.u);
  return terms_.empty() ? 0 : m;
}

std::pair<Monomial, Integer> PolyPQ::leading() const { return *terms_.rbegin(); }

LaurentP PolyPQ::q_coefficient(int v) const {
  LaurentP out;
  for (auto it = terms_.lower_bound(Monomial{v, std::numeric_limits<int>::min()});
       it != terms_.end() && it->first.v == v; ++it) {
    out.emplace(it->first.u, it->second);
  }
  return out;
}

Integer PolyPQ::content() const {
  Integer g = 0;
  for (const auto& [mono, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PolyPQ PolyPQ::shift_q(int d) const {
  if (d == 0) return *this;
  PolyPQ r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace(Monomial{mono.v, mono.u + d * mono.v}, c);
  return r;
}

PolyPQ PolyPQ::at_q_one() const {
  PolyPQ r;
  for (const auto& [mono, c] : terms_) r.add_term(mono.u, 0, c);
  return r;
}

PolyPQ PolyPQ::times_monomial(const Integer& c, int u, int v) const {
  PolyPQ r;
  if (c == 0) return r;
  for (const auto& [mono, k] : terms_) {
    r.terms_.emplace_hint(r.terms_.end(), Monomial{mono.v + v, mono.u + u}, k * c);
  }
  return r;
}

PolyPQ PolyPQ::divide_integer(const Integer& d) const {
  PolyPQ r;
  for (const auto& [mono, c] : terms_) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t())) {
      throw NotDivisible("integer coefficient not divisible");
    }
    Integer qt;
    mpz_divexact(qt.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    r.terms_.emplace_hint(r.terms_.end(), mono, std::move(qt));
  }
  return r;
}

PolyPQ PolyPQ::operator-() const {
  PolyPQ r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

PolyPQ& PolyPQ::operator+=(const PolyPQ& o) {
  if (&o == this) {
    for (auto& [mono, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [mono, c] : o.terms_) add_term(mono.u, mono.v, c);
  return *this;
}

PolyPQ& PolyPQ::operator-=(const PolyPQ& o) {
  if (&o == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [mono, c] : o.terms_) add_term(mono.u, mono.v, -c);
  return *this;
}

PolyPQ& PolyPQ::operator*=(const PolyPQ& o) { return *this = *this * o; }

PolyPQ operator*(const PolyPQ& a, const PolyPQ& b) {
  PolyPQ r;
  if (a.is_zero() || b.is_zero()) return r;
  const PolyPQ& small = a.size() <= b.size() ? a : b;
  const PolyPQ& large = a.size() <= b.size() ? b : a;
  Integer prod;
  for (const auto& [ms, cs] : small.terms_) {
    for (const auto& [ml, cl] : large.terms_) {
      Monomial m{ms.v + ml.v, ms.u + ml.u};
      auto [it, inserted] = r.terms_.try_emplace(m);
      mpz_addmul(it->second.get_mpz_t(), cs.get_mpz_t(), cl.get_mpz_t());
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
  return r;
}

namespace {

// Bounds the quotient's p-exponents: [min_a - min_b, max_a - max_b].
LaurentP laurent_divide(LaurentP rem, const LaurentP& b) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  LaurentP quot;
  if (rem.empty()) return quot;
  const int lo = rem.begin()->first - b.begin()->first;
  const auto& [b_top, b_lead] = *b.rbegin();
  while (!rem.empty()) {
    const auto [r_top, r_lead] = *rem.rbegin();
    const int shift = r_top - b_top;
    if (shift < lo || !mpz_divisible_p(r_lead.get_mpz_t(), b_lead.get_mpz_t())) {
      throw NotDivisible("Laurent polynomial in p does not divide");
    }
    Integer c;
    mpz_divexact(c.get_mpz_t(), r_lead.get_mpz_t(), b_lead.get_mpz_t());
    for (const auto& [u, k] : b) {
      auto [it, inserted] = rem.try_emplace(u + shift);
      mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quot.emplace(shift, std::move(c));
  }
  return quot;
}

}  // namespace

LaurentP divide_exact(const LaurentP& a, const LaurentP& b) { return laurent_divide(a, b); }

PolyPQ divide_exact(const PolyPQ& a, const PolyPQ& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  PolyPQ quot;
  if (a.is_zero()) return quot;

  const int db = b.q_degree();
  const LaurentP lead_b = b.q_coefficient(db);
  const int low_b = b.min_q_exponent();

  if (b.is_monomial()) {
    const auto& [mono, c] = *b.terms().begin();
    if (a.min_q_exponent() < mono.v) throw NotDivisible("q-monomial does not divide");
    return a.divide_integer(c).times_monomial(1, -mono.u, -mono.v);
  }

  PolyPQ rem = a;
  while (!rem.is_zero()) {
    const int dr = rem.q_degree();
    if (dr < db || rem.min_q_exponent() < low_b) {
      throw NotDivisible("polynomial in q does not divide");
    }
    const LaurentP c = laurent_divide(rem.q_coefficient(dr), lead_b);
    PolyPQ term;
    for (const auto& [u, k] : c) term.add_term(u, dr - db, k);
    rem -= term * b;
    quot += term;
  }
  return quot;
}

Rational rational_pow(const Rational& x, long n) {
  if (n < 0) {
    if (x == 0) throw PoleHit("zero raised to a negative power");
    Rational inv = 1 / x;
    return rational_pow(inv, -n);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(n));
  r.canonicalize();
  return r;
}

Rational eval_pq(const PolyPQ& a, const Rational& p, const Rational& q) {
  std::map<int, Rational> p_pow;
  std::map<int, Rational> q_pow;
  Rational sum = 0;
  for (const auto& [mono, c] : a.terms()) {
    auto pi = p_pow.find(mono.u);
    if (pi == p_pow.end()) pi = p_pow.emplace(mono.u, rational_pow(p, mono.u)).first;
    auto qi = q_pow.find(mono.v);
    if (qi == q_pow.end()) qi = q_pow.emplace(mono.v, rational_pow(q, mono.v)).first;
    sum += Rational(c) * pi->second * qi->second;
  }
  return sum;
}

RatPQ::RatPQ(PolyPQ num) : num_(std::move(num)), den_(1) {}

RatPQ::RatPQ(PolyPQ num, PolyPQ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void RatPQ::normalize() {
  if (num_.is_zero()) {
    den_ = PolyPQ(1);
    return;
  }
  Integer g;
  const Integer cn = num_.content();
  const Integer cd = den_.content();
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den_.leading().second < 0) g = -g;
  if (g != 1) {
    num_ = num_.divide_integer(g);
    den_ = den_.divide_integer(g);
  }
}

RatPQ RatPQ::operator-() const {
  RatPQ r = *this;
  r.num_ = -r.num_;
  return r;
}

RatPQ& RatPQ::operator+=(const RatPQ& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RatPQ& RatPQ::operator-=(const RatPQ& o) { return *this += -o; }

RatPQ& RatPQ::operator*=(const RatPQ& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

bool operator==(const RatPQ& a, const RatPQ& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

Rational eval_pq(const RatPQ& a, const Rational& p, const Rational& q) {
  const Rational d = eval_pq(a.den(), p, q);
  if (d == 0) throw PoleHit("denominator vanishes at evaluation point");
  return eval_pq(a.num(), p, q) / d;
}

}  // namespace abzeta
