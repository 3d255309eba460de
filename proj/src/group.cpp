#include "abzeta/group.hpp"

#include <numeric>

#include "abzeta/errors.hpp"

namespace abzeta {

GroupShape::GroupShape(Integer p, std::vector<int> f) : p_(std::move(p)), f_(std::move(f)) {
  if (p_ < 2 || mpz_probab_prime_p(p_.get_mpz_t(), 30) == 0) {
    throw DomainError("p = " + p_.get_str() + " is not prime");
  }
  for (int x : f_) {
    if (x < 0) throw DomainError("exponent increments must be nonnegative");
  }
}

std::vector<int> GroupShape::exponents() const {
  std::vector<int> e(f_.size());
  std::partial_sum(f_.begin(), f_.end(), e.begin());
  return e;
}

int GroupShape::log_order() const {
  const auto e = exponents();
  return std::accumulate(e.begin(), e.end(), 0);
}

int GroupShape::exponent() const { return std::accumulate(f_.begin(), f_.end(), 0); }

Integer GroupShape::order() const {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(log_order()));
  return r;
}

int SubgroupHNF::log_index() const {
  return std::accumulate(diagonal_exponents.begin(), diagonal_exponents.end(), 0);
}

Integer OrderProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), Integer(0));
}

bool OrderProfile::is_palindrome() const {
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != counts[counts.size() - 1 - k]) return false;
  }
  return true;
}

PolyPQ OrderProfile::as_poly() const {
  PolyPQ r;
  for (std::size_t k = 0; k < counts.size(); ++k) r.add_term(0, static_cast<int>(k), counts[k]);
  return r;
}

namespace {

using Wide = __int128;

class Enumerator {
 public:
  Enumerator(const GroupShape& shape, const std::function<void(const SubgroupHNF&)>& visit)
      : visit_(visit), e_(shape.exponents()), p_(shape.p().get_si()) {
    const int r = shape.rank();
    h_.rank = r;
    h_.entries.assign(static_cast<std::size_t>(r * r), 0);
    h_.diagonal_exponents.assign(static_cast<std::size_t>(r), 0);
    pow_.resize(static_cast<std::size_t>(e_.empty() ? 1 : e_.back() + 1));
    pow_[0] = 1;
    for (std::size_t i = 1; i < pow_.size(); ++i) pow_[i] = pow_[i - 1] * p_;
  }

  void run() { column(0); }

 private:
  long long& at(int i, int j) { return h_.entries[static_cast<std::size_t>(i * h_.rank + j)]; }

  // p^{e_j} e_j lies in the span of the first j+1 columns of H.
  bool column_ok(int j) {
    std::vector<Wide> x(static_cast<std::size_t>(j + 1), 0);
    for (int i = j; i >= 0; --i) {
      Wide rhs = (i == j) ? Wide(pow_[static_cast<std::size_t>(e_[static_cast<std::size_t>(j)])]) : 0;
      for (int k = i + 1; k <= j; ++k) rhs -= Wide(at(i, k)) * x[static_cast<std::size_t>(k)];
      const Wide d = at(i, i);
      if (rhs % d != 0) return false;
      x[static_cast<std::size_t>(i)] = rhs / d;
    }
    return true;
  }

  void column(int j) {
    if (j == h_.rank) {
      visit_(h_);
      return;
    }
    for (int a = 0; a <= e_[static_cast<std::size_t>(j)]; ++a) {
      h_.diagonal_exponents[static_cast<std::size_t>(j)] = a;
      at(j, j) = pow_[static_cast<std::size_t>(a)];
      off_diagonal(j, 0);
    }
    at(j, j) = 0;
  }

  void off_diagonal(int j, int i) {
    if (i == j) {
      if (column_ok(j)) column(j + 1);
      return;
    }
    const long long bound = at(i, i);
    for (long long x = 0; x < bound; ++x) {
      at(i, j) = x;
      off_diagonal(j, i + 1);
    }
    at(i, j) = 0;
  }

  const std::function<void(const SubgroupHNF&)>& visit_;
  std::vector<int> e_;
  long long p_;
  std::vector<long long> pow_;
  SubgroupHNF h_;
};

}  // namespace

void for_each_subgroup(const GroupShape& shape, const std::function<void(const SubgroupHNF&)>& visit,
                       const Integer& budget) {
  const Integer order = shape.order();
  if (order > budget) {
    throw BudgetExceeded("|F| = " + order.get_str() + " exceeds enumeration budget " + budget.get_str());
  }
  if (order > (Integer(1) << 62)) throw BudgetExceeded("|F| exceeds 2^62");
  Enumerator(shape, visit).run();
}

std::vector<SubgroupHNF> enumerate_subgroups(const GroupShape& shape, const Integer& budget) {
  std::vector<SubgroupHNF> out;
  for_each_subgroup(shape, [&](const SubgroupHNF& h) { out.push_back(h); }, budget);
  return out;
}

OrderProfile order_profile(const GroupShape& shape, const Integer& budget) {
  const int total = shape.log_order();
  std::vector<unsigned long long> counts(static_cast<std::size_t>(total + 1), 0);
  for_each_subgroup(
      shape, [&](const SubgroupHNF& h) { ++counts[static_cast<std::size_t>(total - h.log_index())]; },
      budget);
  OrderProfile profile;
  profile.counts.reserve(counts.size());
  for (auto c : counts) profile.counts.emplace_back(static_cast<unsigned long>(c));
  return profile;
}

Rational sigma_from_profile(const OrderProfile& profile, const Integer& p, const Rational& a) {
  Rational sum = 0;
  for (std::size_t k = 0; k < profile.counts.size(); ++k) {
    if (profile.counts[k] == 0) continue;
    const Rational ak = a * static_cast<long>(k);
    if (ak.get_den() != 1) {
      throw NonIntegralPower("p^(" + a.get_str() + "*" + std::to_string(k) + ") is not rational");
    }
    sum += Rational(profile.counts[k]) * rational_pow(Rational(p), ak.get_num().get_si());
  }
  return sum;
}

Rational sigma_oracle(const GroupShape& shape, const Rational& a, const Integer& budget) {
  return sigma_from_profile(order_profile(shape, budget), shape.p(), a);
}

}  // namespace abzeta
