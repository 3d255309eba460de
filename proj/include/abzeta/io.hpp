#pragma once

#include <json.hpp>
#include <string>

#include "abzeta/group.hpp"
#include "abzeta/series.hpp"

namespace abzeta {

using Json = nlohmann::ordered_json;

/// {"rank": r, "numerator": [{"exps": [...], "coeff_num": "...",
/// "coeff_den": "..."}], "denominator": [{"u": u, "v": v, "k": k}, ...]}.
/// Repeated factors are listed once per multiplicity.
Json series_to_json(const SeriesRat& s);

/// Same schema for the determinant specialization; exps has length 1 and k
/// keeps the original variable index (X_k -> X^{r-k+1}).
Json det_series_to_json(const DetSeries& d);

/// Decimal strings, c_0 first.
Json profile_to_json(const OrderProfile& profile);

Json den_factor_to_json(const DenFactor& f);
DenFactor den_factor_from_json(const Json& j);

/// `(1-X1)*(1-q*X1)^2*...` in canonical factor order.
std::string factors_to_string(const FactorMultiset& den);
std::string factors_to_string(const std::map<DetFactor, int>& den);

}  // namespace abzeta
