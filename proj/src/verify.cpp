#include "abzeta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <sstream>
#include <thread>

#include "abzeta/errors.hpp"
#include "abzeta/format.hpp"
#include "abzeta/sigma.hpp"

namespace abzeta {

namespace {

std::string shape_text(const GroupShape& shape) {
  std::string out = "[" + shape.p().get_str() + ";";
  for (std::size_t i = 0; i < shape.increments().size(); ++i) {
    out += (i ? "," : "") + std::to_string(shape.increments()[i]);
  }
  return out + "]";
}

void increments_of_sum(int r, int remaining, std::vector<int>& f, std::size_t pos,
                       std::vector<std::vector<int>>& out) {
  if (pos == f.size()) {
    out.push_back(f);
    return;
  }
  for (int x = 0; x <= remaining; ++x) {
    f[pos] = x;
    increments_of_sum(r, remaining - x, f, pos + 1, out);
  }
  f[pos] = 0;
}

CheckOutcome fail(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::kFail, std::move(detail)};
}

bool has_mixed_signs(const PolyPQ& c) {
  bool pos = false;
  bool neg = false;
  for (const auto& [m, k] : c.terms()) (k > 0 ? pos : neg) = true;
  return pos && neg;
}

CheckOutcome guarded(const std::string& name, const std::function<CheckOutcome()>& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    return {name, CheckStatus::kBudget, e.what()};
  } catch (const DomainError& e) {
    return {name, CheckStatus::kBudget, e.what()};
  } catch (const std::exception& e) {
    return fail(name, e.what());
  }
}

}  // namespace

std::vector<std::vector<int>> grid_shapes(int max_rank, int fsum_max) {
  std::vector<std::vector<int>> out;
  for (int r = 1; r <= max_rank; ++r) {
    std::vector<int> f(static_cast<std::size_t>(r), 0);
    increments_of_sum(r, fsum_max, f, 0, out);
  }
  return out;
}

CheckOutcome check_sigma_shape(const GroupShape& shape, const std::vector<long>& aset, const Integer& budget) {
  const std::string name = "sigma " + shape_text(shape);
  return guarded(name, [&]() -> CheckOutcome {
    const PolyPQ fast = sigma_fast(shape.increments());
    const PolyPQ slow = sigma_slow(shape.exponents());
    const PolyPQ closed = sigma_closed(shape.increments());
    if (!(slow == fast)) return fail(name, "slow " + to_string(slow) + " != fast " + to_string(fast));
    if (!(closed == fast)) return fail(name, "closed " + to_string(closed) + " != fast " + to_string(fast));

    for (const auto& [m, c] : fast.terms()) {
      if (c <= 0 || m.u < 0) return fail(name, "coefficient not a nonnegative integer polynomial: " + to_string(fast));
    }
    const int total = shape.log_order();
    if (fast.q_degree() != total) return fail(name, "q-degree differs from log_p|F|");
    for (int k = 0; k <= total; ++k) {
      if (fast.q_coefficient(k) != fast.q_coefficient(total - k)) {
        return fail(name, "not palindromic in q at k=" + std::to_string(k));
      }
    }
    if (fast.q_coefficient(0) != LaurentP{{0, Integer(1)}}) return fail(name, "value at q=0 is not 1");

    const OrderProfile profile = order_profile(shape, budget);
    if (!profile.is_palindrome()) return fail(name, "oracle profile not palindromic");
    const Rational p(shape.p());
    for (int k = 0; k <= total; ++k) {
      PolyPQ ck;
      for (const auto& [u, c] : fast.q_coefficient(k)) ck.add_term(u, 0, c);
      if (eval_pq(ck, p, 0) != Rational(profile.counts[static_cast<std::size_t>(k)])) {
        return fail(name, "subgroups of order p^" + std::to_string(k) + " disagree with the oracle");
      }
    }
    if (eval_pq(fast, p, 1) != Rational(profile.total())) return fail(name, "value at q=1 differs from subgroup count");
    for (long a : aset) {
      const Rational expected = sigma_from_profile(profile, shape.p(), Rational(a));
      const Rational got = eval_pq(fast, p, rational_pow(p, a));
      if (got != expected) {
        return fail(name, "a=" + std::to_string(a) + ": formula " + got.get_str() + " != oracle " + expected.get_str());
      }
    }
    return {name, CheckStatus::kPass, "subgroups=" + profile.total().get_str()};
  });
}

CheckOutcome check_route_equality(int r) {
  const std::string name = "route equality r=" + std::to_string(r);
  return guarded(name, [&]() -> CheckOutcome {
    if (!series_equal(q_series_direct(r), q_series_recursive(r))) return fail(name, "direct and recursive series differ");
    return {name, CheckStatus::kPass, ""};
  });
}

CheckOutcome check_coefficients(int r, int fsum_max) {
  const std::string name = "coefficient extraction r=" + std::to_string(r);
  return guarded(name, [&]() -> CheckOutcome {
    const SeriesRat rec = q_series_recursive(r);
    const SeriesRat dir = q_series_direct(r);
    std::vector<std::vector<int>> shapes;
    std::vector<int> f(static_cast<std::size_t>(r), 0);
    increments_of_sum(r, fsum_max, f, 0, shapes);
    for (const auto& inc : shapes) {
      const PolyPQ expected = sigma_fast(inc);
      if (!(coeff_extract(rec, inc) == expected) || !(coeff_extract(dir, inc) == expected)) {
        std::string where;
        for (int x : inc) where += std::to_string(x) + ",";
        return fail(name, "coefficient of X^(" + where + ") differs from sigma");
      }
    }
    return {name, CheckStatus::kPass, std::to_string(shapes.size()) + " coefficients"};
  });
}

CheckOutcome check_golden(const GoldenIdentity& golden) {
  const std::string name = "golden identity '" + golden.name + "' (r=" + std::to_string(golden.rank) + ")";
  return guarded(name, [&]() -> CheckOutcome {
    if (!golden.denominator.empty() && golden.denominator != build_B(golden.rank)) {
      return fail(name, "denominator differs from B_" + std::to_string(golden.rank));
    }
    const Specialization spec = golden.specialization;
    const CoefficientMap computed = computed_numerator(golden.rank, spec);

    CoefficientMap expected = golden.numerator;
    for (const auto& [g, c] : golden.corrections) {
      if (spec == Specialization::kNone || g.size() != 1) {
        return fail(name, "corrections are supported for determinant specializations only");
      }
      auto printed = golden.numerator.find(g);
      if (printed == golden.numerator.end() || printed->second == c) {
        return fail(name, "correction at " + exps_text(g, spec) + " does not replace a printed coefficient");
      }
      const UniXPoly independent = det_numerator_from_sigma(golden.rank, g[0], spec == Specialization::kDetQ1);
      auto it = independent.find(g[0]);
      if (it == independent.end() || !(it->second == c)) {
        return fail(name, "correction at " + exps_text(g, spec) + " not confirmed by sigma coefficients");
      }
      expected[g] = c;
    }

    if (!expected.empty()) {
      const auto mismatches = compare_coefficients(expected, computed);
      if (!mismatches.empty()) {
        const auto& m = mismatches.front();
        return fail(name, std::to_string(mismatches.size()) + " coefficient(s) differ; first at " +
                              exps_text(m.exps, spec) + ": expected " + to_string(m.expected) + ", computed " +
                              to_string(m.actual));
      }
    }

    const auto& claims = golden.claims;
    if (claims.x_degree || claims.leading_monomial) {
      if (computed.empty()) return fail(name, "computed numerator is zero");
      const auto& [top, top_coeff] = *computed.rbegin();
      if (claims.x_degree && spec != Specialization::kNone && top[0] != *claims.x_degree) {
        return fail(name, "X-degree " + std::to_string(top[0]) + ", expected " + std::to_string(*claims.x_degree));
      }
      if (claims.leading_monomial) {
        const auto [m, k] = top_coeff.leading();
        const PolyPQ got = PolyPQ::monomial(k, m.u, m.v);
        if (top != claims.leading_monomial->first || !(got == claims.leading_monomial->second)) {
          return fail(name, "leading monomial " + to_string(got) + "*" + exps_text(top, spec) + ", expected " +
                                to_string(claims.leading_monomial->second) + "*" +
                                exps_text(claims.leading_monomial->first, spec));
        }
      }
    }
    if (claims.p_degree) {
      int deg = 0;
      for (const auto& [g, c] : computed) deg = std::max(deg, c.max_p_exponent());
      if (deg != *claims.p_degree) {
        return fail(name, "p-degree " + std::to_string(deg) + ", expected " + std::to_string(*claims.p_degree));
      }
    }
    for (const auto& g : claims.mixed_sign) {
      auto it = computed.find(g);
      if (it == computed.end() || !has_mixed_signs(it->second)) {
        return fail(name, "coefficient of " + exps_text(g, spec) + " does not mix signs");
      }
    }

    std::string detail = std::to_string(computed.size()) + " coefficients";
    if (!golden.corrections.empty()) detail += ", " + std::to_string(golden.corrections.size()) + " corrected";
    return {name, CheckStatus::kPass, detail};
  });
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed(); });
}

const CheckOutcome* VerifyReport::first_failure() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return &c;
  }
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kBudget) return &c;
  }
  return nullptr;
}

int VerifyReport::exit_code() const {
  const CheckOutcome* f = first_failure();
  if (!f) return 0;
  return f->status == CheckStatus::kFail ? 2 : 3;
}

VerifyReport run_verify(const VerifyOptions& options) {
  std::vector<std::function<CheckOutcome()>> tasks;
  if (!options.golden_only) {
    for (long p : options.pset) {
      for (const auto& f : grid_shapes(std::min(options.rank_max, 3), options.fsum_max)) {
        tasks.emplace_back([p, f, &options]() -> CheckOutcome {
          return guarded("sigma [" + std::to_string(p) + ";...]",
                         [&] { return check_sigma_shape(GroupShape(p, f), options.aset, options.budget); });
        });
      }
    }
    for (int r = 1; r <= std::min(options.rank_max, 4); ++r) tasks.emplace_back([r] { return check_route_equality(r); });
    for (int r = 1; r <= std::min(options.rank_max, 3); ++r) {
      tasks.emplace_back([r, &options] { return check_coefficients(r, options.fsum_max); });
    }
  }
  std::vector<GoldenIdentity> goldens;
  try {
    goldens = load_golden_dir(options.golden_dir);
  } catch (const std::exception& e) {
    VerifyReport report;
    report.checks.push_back({"golden files", CheckStatus::kBudget, e.what()});
    return report;
  }
  for (const auto& g : goldens) {
    if (g.rank <= options.rank_max) tasks.emplace_back([&g] { return check_golden(g); });
  }

  VerifyReport report;
  report.checks.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) report.checks[i] = tasks[i]();
  };
  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace abzeta
