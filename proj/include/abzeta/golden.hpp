#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "abzeta/io.hpp"
#include "abzeta/series.hpp"

namespace abzeta {

enum class Specialization { kNone, kDet, kDetQ1 };

Specialization parse_specialization(const std::string& s);

using CoefficientMap = std::map<ExponentVector, PolyPQ>;

/// Structural claims that do not list every coefficient.
struct GoldenClaims {
  std::optional<int> x_degree;
  std::optional<int> p_degree;
  // Highest X-power and, inside its coefficient, the highest (q, p) term.
  std::optional<std::pair<ExponentVector, PolyPQ>> leading_monomial;
  std::vector<ExponentVector> mixed_sign;
};

/// A reference identity B_r * Q_{r,a} = A_r, possibly specialized.
/// `corrections` replaces printed coefficients known to be wrong.
struct GoldenIdentity {
  std::string name;
  int rank = 0;
  Specialization specialization = Specialization::kNone;
  CoefficientMap numerator;
  CoefficientMap corrections;
  FactorMultiset denominator;
  GoldenClaims claims;
};

GoldenIdentity parse_golden(const Json& j);
GoldenIdentity load_golden(const std::filesystem::path& path);
/// Every *.json in dir, ordered by (rank, name).
std::vector<GoldenIdentity> load_golden_dir(const std::filesystem::path& dir);

/// ABZETA_GOLDEN_DIR if set, else the directory shipped with the sources.
std::filesystem::path default_golden_dir();

/// A_r in the key space of a golden file: full exponent vectors for kNone,
/// single X-degree for the determinant specializations.
CoefficientMap computed_numerator(int rank, Specialization spec);

/// Determinant-specialized A_r up to X-degree max_degree, computed from
/// sigma_fast coefficients times the specialized B_r. Independent of the
/// series construction.
UniXPoly det_numerator_from_sigma(int rank, int max_degree, bool q_one);

struct CoefficientMismatch {
  ExponentVector exps;
  PolyPQ expected;
  PolyPQ actual;
};

std::vector<CoefficientMismatch> compare_coefficients(const CoefficientMap& expected,
                                                      const CoefficientMap& actual);

std::string exps_text(const ExponentVector& g, Specialization spec);

}  // namespace abzeta
