#pragma once

#include <functional>
#include <vector>

#include "abzeta/poly.hpp"

namespace abzeta {

/// Default bound on |F| for subgroup enumeration.
inline const Integer kDefaultBudget = Integer(1) << 20;

/// F = [p; f_1, ..., f_r] = Z/p^{e_1} x ... x Z/p^{e_r}, e_i = f_1 + ... + f_i.
class GroupShape {
 public:
  /// Throws DomainError if p is not prime or some f_i is negative.
  GroupShape(Integer p, std::vector<int> f);

  const Integer& p() const { return p_; }
  const std::vector<int>& increments() const { return f_; }
  int rank() const { return static_cast<int>(f_.size()); }

  /// Nondecreasing exponents e_1 <= ... <= e_r.
  std::vector<int> exponents() const;
  /// log_p |F| = sum of the e_i.
  int log_order() const;
  /// l with p^l the exponent of F.
  int exponent() const;
  Integer order() const;

 private:
  Integer p_;
  std::vector<int> f_;
};

/// Upper-triangular column Hermite normal form of a subgroup lattice L with
/// M Z^r <= L <= Z^r, M = diag(p^{e_i}). Diagonal entries are p-powers and the
/// entries right of the diagonal in row i lie in [0, H(i,i)).
struct SubgroupHNF {
  int rank = 0;
  std::vector<long long> entries;  // row-major
  std::vector<int> diagonal_exponents;

  long long at(int i, int j) const { return entries[static_cast<std::size_t>(i * rank + j)]; }
  /// log_p det H = log_p [F : H].
  int log_index() const;
};

/// c_k = number of subgroups of order p^k, k = 0..log_p|F|.
struct OrderProfile {
  std::vector<Integer> counts;

  Integer total() const;
  bool is_palindrome() const;
  /// sum_k c_k q^k.
  PolyPQ as_poly() const;
};

/// Visits every subgroup exactly once. Throws BudgetExceeded if |F| > budget.
void for_each_subgroup(const GroupShape& shape, const std::function<void(const SubgroupHNF&)>& visit,
                       const Integer& budget = kDefaultBudget);

std::vector<SubgroupHNF> enumerate_subgroups(const GroupShape& shape,
                                             const Integer& budget = kDefaultBudget);

OrderProfile order_profile(const GroupShape& shape, const Integer& budget = kDefaultBudget);

/// sum_k c_k p^{a k}. Throws NonIntegralPower if some a k with c_k != 0 is not
/// an integer.
Rational sigma_from_profile(const OrderProfile& profile, const Integer& p, const Rational& a);

Rational sigma_oracle(const GroupShape& shape, const Rational& a,
                      const Integer& budget = kDefaultBudget);

}  // namespace abzeta
