#include "abzeta/golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <tuple>

#include "abzeta/errors.hpp"
#include "abzeta/format.hpp"
#include "abzeta/sigma.hpp"

#ifndef ABZETA_GOLDEN_DIR
#define ABZETA_GOLDEN_DIR "golden"
#endif

namespace abzeta {

namespace {

PolyPQ coefficient_from_json(const Json& t) {
  const PolyPQ num = parse_poly(t.at("coeff_num").get<std::string>());
  const PolyPQ den = parse_poly(t.value("coeff_den", std::string("1")));
  return RatPQ(num, den).to_poly();
}

CoefficientMap terms_from_json(const Json& arr) {
  CoefficientMap out;
  for (const auto& t : arr) {
    auto g = t.at("exps").get<ExponentVector>();
    auto [it, inserted] = out.emplace(std::move(g), coefficient_from_json(t));
    if (!inserted) throw DomainError("duplicate exponent vector in golden file");
  }
  return out;
}

void enumerate_increments(int r, int k, int budget_left, const std::vector<int>& weights,
                          std::vector<int>& f, int weight,
                          const std::function<void(const std::vector<int>&, int)>& visit) {
  if (k == r) {
    visit(f, weight);
    return;
  }
  for (int x = 0; weight + x * weights[static_cast<std::size_t>(k)] <= budget_left; ++x) {
    f[static_cast<std::size_t>(k)] = x;
    enumerate_increments(r, k + 1, budget_left, weights, f, weight + x * weights[static_cast<std::size_t>(k)], visit);
  }
  f[static_cast<std::size_t>(k)] = 0;
}

}  // namespace

Specialization parse_specialization(const std::string& s) {
  if (s == "none") return Specialization::kNone;
  if (s == "det") return Specialization::kDet;
  if (s == "det_q1") return Specialization::kDetQ1;
  throw DomainError("unknown specialization '" + s + "'");
}

GoldenIdentity parse_golden(const Json& j) {
  GoldenIdentity g;
  g.name = j.at("name").get<std::string>();
  g.rank = j.at("rank").get<int>();
  g.specialization = parse_specialization(j.value("specialization", std::string("none")));
  if (j.contains("numerator")) g.numerator = terms_from_json(j.at("numerator"));
  if (j.contains("corrections")) g.corrections = terms_from_json(j.at("corrections"));
  if (j.contains("denominator")) {
    for (const auto& f : j.at("denominator")) ++g.denominator[den_factor_from_json(f)];
  }
  if (j.contains("claims")) {
    const auto& c = j.at("claims");
    if (c.contains("x_degree")) g.claims.x_degree = c.at("x_degree").get<int>();
    if (c.contains("p_degree")) g.claims.p_degree = c.at("p_degree").get<int>();
    if (c.contains("leading_monomial")) {
      const auto& l = c.at("leading_monomial");
      g.claims.leading_monomial = std::make_pair(l.at("exps").get<ExponentVector>(), coefficient_from_json(l));
    }
    if (c.contains("mixed_sign_exps")) {
      for (const auto& e : c.at("mixed_sign_exps")) {
        g.claims.mixed_sign.push_back(e.is_array() ? e.get<ExponentVector>() : ExponentVector{e.get<int>()});
      }
    }
  }
  return g;
}

GoldenIdentity load_golden(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open golden file " + path.string());
  try {
    return parse_golden(Json::parse(in));
  } catch (const Json::exception& e) {
    throw DomainError("malformed golden file " + path.string() + ": " + e.what());
  }
}

std::vector<GoldenIdentity> load_golden_dir(const std::filesystem::path& dir) {
  std::vector<GoldenIdentity> out;
  if (!std::filesystem::is_directory(dir)) throw DomainError("golden directory not found: " + dir.string());
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") out.push_back(load_golden(entry.path()));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return std::tie(a.rank, a.name) < std::tie(b.rank, b.name); });
  return out;
}

std::filesystem::path default_golden_dir() {
  if (const char* env = std::getenv("ABZETA_GOLDEN_DIR")) return env;
  return ABZETA_GOLDEN_DIR;
}

CoefficientMap computed_numerator(int rank, Specialization spec) {
  CoefficientMap out;
  if (spec == Specialization::kNone) {
    for (const auto& [g, c] : series_numerator(rank).terms()) out.emplace(g, c);
    return out;
  }
  SeriesRat s;
  s.rank = rank;
  s.num = series_numerator(rank);
  s.den = build_B(rank);
  for (const auto& [n, c] : specialize_det(s, spec == Specialization::kDetQ1).num) out.emplace(ExponentVector{n}, c);
  return out;
}

UniXPoly det_numerator_from_sigma(int rank, int max_degree, bool q_one) {
  std::vector<int> weights(static_cast<std::size_t>(rank));
  for (int t = 1; t <= rank; ++t) weights[static_cast<std::size_t>(t - 1)] = rank - t + 1;
  std::vector<PolyPQ> series(static_cast<std::size_t>(max_degree + 1));
  std::vector<int> f(static_cast<std::size_t>(rank), 0);
  enumerate_increments(rank, 0, max_degree, weights, f, 0, [&](const std::vector<int>& inc, int weight) {
    const PolyPQ s = sigma_fast(inc);
    series[static_cast<std::size_t>(weight)] += q_one ? s.at_q_one() : s;
  });
  for (const auto& [fac, k] : build_B(rank)) {
    const int w = rank - fac.k + 1;
    const PolyPQ alpha = PolyPQ::monomial(1, fac.u, q_one ? 0 : fac.v);
    for (int i = 0; i < k; ++i) {
      for (int n = max_degree; n >= w; --n) {
        series[static_cast<std::size_t>(n)] -= alpha * series[static_cast<std::size_t>(n - w)];
      }
    }
  }
  UniXPoly out;
  for (int n = 0; n <= max_degree; ++n) {
    if (!series[static_cast<std::size_t>(n)].is_zero()) out.emplace(n, series[static_cast<std::size_t>(n)]);
  }
  return out;
}

std::vector<CoefficientMismatch> compare_coefficients(const CoefficientMap& expected, const CoefficientMap& actual) {
  std::vector<CoefficientMismatch> out;
  for (const auto& [g, c] : expected) {
    auto it = actual.find(g);
    const PolyPQ a = it == actual.end() ? PolyPQ() : it->second;
    if (!(a == c)) out.push_back({g, c, a});
  }
  for (const auto& [g, a] : actual) {
    if (!expected.contains(g)) out.push_back({g, PolyPQ(), a});
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.exps < y.exps; });
  return out;
}

std::string exps_text(const ExponentVector& g, Specialization spec) {
  if (spec != Specialization::kNone && g.size() == 1) return "X^" + std::to_string(g[0]);
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "X" + std::to_string(i + 1);
    if (g[i] > 1) out += "^" + std::to_string(g[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace abzeta
