#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "abzeta/golden.hpp"
#include "abzeta/group.hpp"

namespace abzeta {

enum class CheckStatus { kPass, kFail, kBudget };

struct CheckOutcome {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;

  bool passed() const { return status == CheckStatus::kPass; }
};

/// All increment vectors f with 1 <= rank <= max_rank and sum f <= fsum_max,
/// ordered by rank then lexicographically.
std::vector<std::vector<int>> grid_shapes(int max_rank, int fsum_max);

/// slow = fast = closed as polynomials, evaluations at q = p^a equal the
/// enumeration oracle for every a, and the structural properties hold:
/// nonnegative coefficients, q-palindromy, value 1 at q = 0, value at q = 1
/// equal to the subgroup count.
CheckOutcome check_sigma_shape(const GroupShape& shape, const std::vector<long>& aset,
                               const Integer& budget = kDefaultBudget);

/// q_series_direct(r) == q_series_recursive(r) by cross-multiplication.
CheckOutcome check_route_equality(int r);

/// coeff_extract of both routes equals sigma_fast for every f of the given
/// rank with sum f <= fsum_max.
CheckOutcome check_coefficients(int r, int fsum_max);

/// Compares a golden identity against the computed A_r. Corrections are
/// applied first and each one is re-derived from sigma coefficients.
CheckOutcome check_golden(const GoldenIdentity& golden);

struct VerifyOptions {
  int rank_max = 4;
  int fsum_max = 4;
  std::vector<long> pset{2, 3};
  std::vector<long> aset{-2, -1, 0, 1, 2, 3};
  int jobs = 1;
  bool golden_only = false;
  std::filesystem::path golden_dir = default_golden_dir();
  Integer budget = kDefaultBudget;
};

struct VerifyReport {
  std::vector<CheckOutcome> checks;

  bool all_passed() const;
  const CheckOutcome* first_failure() const;
  /// 0 all pass, 2 any mathematical disagreement, 3 budget/domain only.
  int exit_code() const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace abzeta
