#include <doctest.h>

#include "abzeta/errors.hpp"
#include "abzeta/golden.hpp"
#include "abzeta/io.hpp"
#include "abzeta/verify.hpp"

using namespace abzeta;

namespace {

const GoldenIdentity* find(const std::vector<GoldenIdentity>& all, const std::string& name) {
  for (const auto& g : all)
    if (g.name == name) return &g;
  return nullptr;
}

}  // namespace

TEST_CASE("golden files load") {
  const auto all = load_golden_dir(default_golden_dir());
  REQUIRE(all.size() == 4);
  CHECK(all.front().rank == 2);
  const GoldenIdentity* r4 = find(all, "r4");
  REQUIRE(r4);
  CHECK(r4->specialization == Specialization::kDetQ1);
  CHECK(r4->numerator.size() == 26);
  CHECK(r4->corrections.size() == 3);
  CHECK(r4->denominator == build_B(4));
  const GoldenIdentity* r5 = find(all, "r5");
  REQUIRE(r5);
  CHECK(r5->claims.x_degree == 50);
  CHECK(r5->claims.p_degree == 25);
}

TEST_CASE("parse errors") {
  CHECK_THROWS(parse_golden(Json::parse(R"({"schema": "other"})")));
  CHECK_THROWS_AS(parse_specialization("diag"), DomainError);
  CHECK(parse_specialization("det_q1") == Specialization::kDetQ1);
}

TEST_CASE("JSON serialization") {
  const Json j = series_to_json(to_B_form(q_series_recursive(2)));
  CHECK(j["rank"] == 2);
  CHECK(j["numerator"].size() == 3);
  CHECK(j["denominator"].size() == 5);
  CHECK(j["numerator"][0]["coeff_den"] == "1");
  const DenFactor f{2, 3, -1};
  CHECK(den_factor_from_json(den_factor_to_json(f)) == f);
  const Json prof = profile_to_json(order_profile(GroupShape(2, {1, 0})));
  CHECK(prof == Json::array({"1", "3", "1"}));
}

TEST_CASE("sigma-route determinant numerator matches the series route") {
  const UniXPoly from_sigma = det_numerator_from_sigma(3, 11, false);
  const DetSeries d = specialize_det(q_series_recursive(3), false);
  CHECK(from_sigma == d.num);
  const UniXPoly q1 = det_numerator_from_sigma(4, 12, true);
  const DetSeries d4 = specialize_det(q_series_recursive(4), true);
  for (int n = 0; n <= 12; ++n) {
    auto a = q1.find(n);
    auto b = d4.num.find(n);
    CHECK((a == q1.end()) == (b == d4.num.end()));
    if (a != q1.end() && b != d4.num.end()) CHECK(a->second == b->second);
  }
}

TEST_CASE("golden checks") {
  const auto all = load_golden_dir(default_golden_dir());
  for (const auto& g : all) {
    if (g.rank > 4) continue;
    const CheckOutcome c = check_golden(g);
    CAPTURE(c.detail);
    CHECK(c.passed());
  }
  GoldenIdentity bad = *find(all, "r2");
  bad.numerator.begin()->second += PolyPQ(1);
  const CheckOutcome c = check_golden(bad);
  CHECK(c.status == CheckStatus::kFail);
  CHECK(c.name.find("r2") != std::string::npos);

  GoldenIdentity wrong_fix = *find(all, "r4");
  wrong_fix.corrections.begin()->second += PolyPQ(1);
  CHECK(check_golden(wrong_fix).status == CheckStatus::kFail);
}

TEST_CASE("verification report") {
  VerifyOptions opt;
  opt.rank_max = 2;
  opt.fsum_max = 2;
  opt.pset = {2};
  opt.aset = {-1, 0, 1};
  const VerifyReport one = run_verify(opt);
  CHECK(one.all_passed());
  CHECK(one.exit_code() == 0);
  opt.jobs = 3;
  const VerifyReport many = run_verify(opt);
  REQUIRE(many.checks.size() == one.checks.size());
  for (std::size_t i = 0; i < one.checks.size(); ++i) {
    CHECK(many.checks[i].name == one.checks[i].name);
    CHECK(many.checks[i].detail == one.checks[i].detail);
  }
  opt.budget = 4;
  const VerifyReport small = run_verify(opt);
  CHECK(small.exit_code() == 3);
  CHECK(grid_shapes(2, 1).size() == 5);
}

TEST_CASE("rank 5 structural claims") {
  const auto all = load_golden_dir(default_golden_dir());
  const GoldenIdentity* r5 = find(all, "r5");
  REQUIRE(r5);
  REQUIRE(r5->claims.leading_monomial);
  CHECK(r5->claims.leading_monomial->second == PolyPQ::monomial(11, 25, 0));
  const CheckOutcome c = check_golden(*r5);
  CAPTURE(c.detail);
  CHECK(c.passed());
}
