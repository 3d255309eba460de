#include "abzeta/io.hpp"

#include "abzeta/format.hpp"

namespace abzeta {

namespace {

std::string factor_text(int u, int v, const std::string& x) {
  const PolyPQ alpha = PolyPQ::monomial(1, u, v);
  const std::string a = to_string(alpha);
  return "(1-" + (a == "1" ? x : a + "*" + x) + ")";
}

template <typename Map, typename F>
std::string join_factors(const Map& den, F&& text) {
  std::string out;
  for (const auto& [f, k] : den) {
    if (!out.empty()) out += '*';
    out += text(f);
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Json den_factor_to_json(const DenFactor& f) { return Json{{"u", f.u}, {"v", f.v}, {"k", f.k}}; }

DenFactor den_factor_from_json(const Json& j) {
  return DenFactor{j.at("k").get<int>(), j.at("v").get<int>(), j.at("u").get<int>()};
}

Json series_to_json(const SeriesRat& s) {
  Json out;
  out["rank"] = s.rank;
  Json num = Json::array();
  const XPoly rat = s.numerator_rat();
  for (const auto& [g, c] : rat.terms()) {
    num.push_back({{"exps", g}, {"coeff_num", to_compact_string(c.num())}, {"coeff_den", to_compact_string(c.den())}});
  }
  out["numerator"] = std::move(num);
  Json den = Json::array();
  for (const auto& [f, k] : s.den) {
    for (int i = 0; i < k; ++i) den.push_back(den_factor_to_json(f));
  }
  out["denominator"] = std::move(den);
  return out;
}

Json det_series_to_json(const DetSeries& d) {
  Json out;
  out["rank"] = d.rank;
  Json num = Json::array();
  for (const auto& [n, c] : d.num) {
    num.push_back({{"exps", {n}}, {"coeff_num", to_compact_string(c)}, {"coeff_den", "1"}});
  }
  out["numerator"] = std::move(num);
  Json den = Json::array();
  for (const auto& [f, k] : d.den) {
    for (int i = 0; i < k; ++i) den.push_back({{"u", f.u}, {"v", f.v}, {"k", d.rank - f.w + 1}});
  }
  out["denominator"] = std::move(den);
  return out;
}

Json profile_to_json(const OrderProfile& profile) {
  Json out = Json::array();
  for (const auto& c : profile.counts) out.push_back(c.get_str());
  return out;
}

std::string factors_to_string(const FactorMultiset& den) {
  return join_factors(den, [](const DenFactor& f) { return factor_text(f.u, f.v, "X" + std::to_string(f.k)); });
}

std::string factors_to_string(const std::map<DetFactor, int>& den) {
  return join_factors(den, [](const DetFactor& f) {
    return factor_text(f.u, f.v, f.w == 1 ? std::string("X") : "X^" + std::to_string(f.w));
  });
}

}  // namespace abzeta
