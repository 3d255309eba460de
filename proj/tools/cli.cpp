#include "abzeta/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "abzeta/bench.hpp"
#include "abzeta/errors.hpp"
#include "abzeta/format.hpp"
#include "abzeta/io.hpp"
#include "abzeta/series.hpp"
#include "abzeta/sigma.hpp"
#include "abzeta/verify.hpp"

namespace abzeta {

namespace {

constexpr int kSeriesRankCap = 5;

Integer budget_from_env() {
  const char* env = std::getenv("ABZETA_BUDGET");
  if (!env || !*env) return kDefaultBudget;
  Integer b;
  if (b.set_str(env, 10) != 0 || b <= 0) throw DomainError(std::string("invalid ABZETA_BUDGET '") + env + "'");
  return b;
}

Integer parse_integer(const std::string& s) {
  Integer z;
  if (z.set_str(s, 10) != 0) throw DomainError("not an integer: '" + s + "'");
  return z;
}

std::vector<int> parse_increments(const std::string& s) {
  std::vector<int> f;
  if (s.empty()) return f;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int x = std::stoi(item, &used);
      if (used != item.size() || x < 0) throw std::invalid_argument(item);
      f.push_back(x);
    } catch (const std::exception&) {
      throw DomainError("invalid exponent increment '" + item + "'");
    }
  }
  return f;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    // a..b ranges
    const auto dots = item.find("..");
    try {
      if (dots != std::string::npos) {
        const long lo = std::stol(item.substr(0, dots));
        const long hi = std::stol(item.substr(dots + 2));
        for (long x = lo; x <= hi; ++x) out.push_back(x);
      } else {
        out.push_back(std::stol(item));
      }
    } catch (const std::exception&) {
      throw DomainError("invalid integer list '" + s + "'");
    }
  }
  return out;
}

struct SigmaArgs {
  std::string p;
  long a = 0;
  std::string f;
  std::string method = "fast";
  bool poly = false;
};

struct SeriesArgs {
  int rank = 1;
  bool det = false;
  bool q1 = false;
  std::string route = "recursive";
};

struct VerifyArgs {
  int rank_max = 4;
  int fsum_max = 4;
  std::string pset = "2,3";
  std::string aset = "-2..3";
  int jobs = 1;
  bool golden_only = false;
  std::string golden_dir;
};

struct DirichletArgs {
  int rank = 1;
  long a = 0;
  std::string p;
  std::string s;
};

struct BenchArgs {
  int rank = 2;
  int fsum = 14;
  int fsum_min = 1;
  int repeats = 3;
  int series_rank = 0;
};

int cmd_sigma(const SigmaArgs& args, bool json, std::ostream& out) {
  const GroupShape shape(parse_integer(args.p), parse_increments(args.f));
  const Integer budget = budget_from_env();
  Json report;
  report["p"] = shape.p().get_str();
  report["a"] = std::to_string(args.a);
  report["f"] = shape.increments();
  report["method"] = args.method;

  if (args.method != "all") {
    const SigmaMethod method = parse_method(args.method);
    const Rational value = sigma_value(shape, args.a, method, budget);
    report["value"] = value.get_str();
    if (args.poly) report["poly"] = to_string(sigma_poly(shape, method, budget));
    if (json) {
      out << report.dump(2) << "\n";
    } else {
      out << value.get_str() << "\n";
      if (args.poly) out << report["poly"].get<std::string>() << "\n";
    }
    return kExitOk;
  }

  std::map<SigmaMethod, Rational> values;
  for (auto m : {SigmaMethod::kOracle, SigmaMethod::kSlow, SigmaMethod::kFast, SigmaMethod::kClosed}) {
    values[m] = sigma_value(shape, args.a, m, budget);
  }
  const PolyPQ fast = sigma_fast(shape.increments());
  const bool polys_agree = sigma_slow(shape.exponents()) == fast && sigma_closed(shape.increments()) == fast;
  bool agree = polys_agree;
  for (const auto& [m, v] : values) agree = agree && v == values[SigmaMethod::kFast];

  report["value"] = values[SigmaMethod::kFast].get_str();
  Json per = Json::object();
  for (const auto& [m, v] : values) per[method_name(m)] = v.get_str();
  report["values"] = per;
  if (args.poly) report["poly"] = to_string(fast);
  report["agreement"] = agree;
  if (json) {
    out << report.dump(2) << "\n";
  } else {
    out << values[SigmaMethod::kFast].get_str() << "\n";
    if (args.poly) out << to_string(fast) << "\n";
    for (const auto& [m, v] : values) out << method_name(m) << ": " << v.get_str() << "\n";
    out << "agreement: " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? kExitOk : kExitDisagreement;
}

int cmd_series(const SeriesArgs& args, bool json, std::ostream& out) {
  if (args.rank < 1 || args.rank > kSeriesRankCap) {
    throw BudgetExceeded("rank must be in 1.." + std::to_string(kSeriesRankCap));
  }
  if (args.route != "recursive" && args.route != "direct") throw DomainError("unknown route '" + args.route + "'");
  const SeriesRat built = args.route == "direct" ? q_series_direct(args.rank) : q_series_recursive(args.rank);
  SeriesRat b = to_B_form(built);

  if (args.det) {
    const DetSeries d = specialize_det(b, args.q1);
    if (json) {
      Json j = det_series_to_json(d);
      j["specialization"] = args.q1 ? "det_q1" : "det";
      out << j.dump(2) << "\n";
    } else {
      out << "rank: " << d.rank << "\n";
      out << "specialization: " << (args.q1 ? "X_t -> X^(r-t+1), q = 1" : "X_t -> X^(r-t+1)") << "\n";
      out << "numerator: " << to_string(d.num) << "\n";
      out << "denominator: " << factors_to_string(d.den) << "\n";
    }
    return kExitOk;
  }

  if (args.q1) {
    b.num = b.num.map_coefficients([](const ExponentVector&, const PolyPQ& c) { return c.at_q_one(); });
    FactorMultiset den;
    for (const auto& [f, k] : b.den) den[DenFactor{f.k, 0, f.u}] += k;
    b.den = den;
  }
  if (json) {
    Json j = series_to_json(b);
    j["specialization"] = args.q1 ? "q1" : "none";
    out << j.dump(2) << "\n";
  } else {
    out << "rank: " << b.rank << "\n";
    out << "numerator: " << to_string(b.num) << "\n";
    out << "denominator: " << factors_to_string(b.den) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, bool json, std::ostream& out) {
  VerifyOptions options;
  options.rank_max = args.rank_max;
  options.fsum_max = args.fsum_max;
  options.pset = parse_long_list(args.pset);
  options.aset = parse_long_list(args.aset);
  options.jobs = args.jobs;
  options.golden_only = args.golden_only;
  if (!args.golden_dir.empty()) options.golden_dir = args.golden_dir;
  options.budget = budget_from_env();

  const VerifyReport report = run_verify(options);
  const CheckOutcome* first = report.first_failure();
  if (json) {
    Json j;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
      checks.push_back({{"name", c.name},
                        {"status", c.status == CheckStatus::kPass ? "pass" : c.status == CheckStatus::kFail ? "fail" : "error"},
                        {"detail", c.detail}});
    }
    j["checks"] = std::move(checks);
    j["result"] = report.all_passed() ? "PASS" : "FAIL";
    if (first) j["first_failure"] = first->name + ": " + first->detail;
    out << j.dump(2) << "\n";
  } else {
    std::size_t passed = 0;
    for (const auto& c : report.checks) {
      if (c.passed()) {
        ++passed;
        continue;
      }
      out << (c.status == CheckStatus::kFail ? "FAIL " : "ERROR ") << c.name << ": " << c.detail << "\n";
    }
    for (const auto& c : report.checks) {
      if (c.passed() && c.name.rfind("golden", 0) == 0) out << "ok   " << c.name << ": " << c.detail << "\n";
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
    if (first) out << "first failure: " << first->name << ": " << first->detail << "\n";
    out << (report.all_passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.exit_code();
}

int cmd_dirichlet(const DirichletArgs& args, bool json, std::ostream& out) {
  const Rational value = dirichlet_p_factor(args.rank, args.a, parse_integer(args.p), parse_rational(args.s));
  if (json) {
    out << Json{{"rank", args.rank}, {"a", std::to_string(args.a)}, {"p", args.p}, {"s", args.s}, {"value", value.get_str()}}
               .dump(2)
        << "\n";
  } else {
    out << value.get_str() << "\n";
  }
  return kExitOk;
}

int cmd_bench(const BenchArgs& args, bool json, std::ostream& out) {
  if (args.rank < 1 || args.fsum_min < 0 || args.fsum < args.fsum_min) throw DomainError("invalid bench range");
  const auto rows = bench_sigma(args.rank, args.fsum_min, args.fsum, args.repeats);
  std::vector<double> slow;
  std::vector<double> fast;
  for (const auto& r : rows) {
    slow.push_back(r.slow_seconds);
    fast.push_back(r.fast_seconds);
  }
  const double series_seconds = args.series_rank > 0 ? time_series_construction(args.series_rank) : 0.0;
  if (json) {
    Json j;
    j["rank"] = args.rank;
    Json table = Json::array();
    for (const auto& r : rows) {
      table.push_back({{"fsum", r.fsum}, {"slow_s", r.slow_seconds}, {"fast_s", r.fast_seconds}, {"closed_s", r.closed_seconds}});
    }
    j["rows"] = std::move(table);
    j["slow_growth_per_unit"] = mean_growth(slow);
    j["fast_growth_per_unit"] = mean_growth(fast);
    if (args.series_rank > 0) j["series_seconds"] = series_seconds;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "rank " << args.rank << ", f = (n, 0, ..., 0)\n";
  out << std::setw(6) << "n" << std::setw(14) << "slow_s" << std::setw(14) << "fast_s" << std::setw(14) << "closed_s" << "\n";
  out << std::scientific << std::setprecision(3);
  for (const auto& r : rows) {
    out << std::setw(6) << r.fsum << std::setw(14) << r.slow_seconds << std::setw(14) << r.fast_seconds << std::setw(14)
        << r.closed_seconds << "\n";
  }
  out << std::fixed << std::setprecision(3);
  out << "slow growth per unit: " << mean_growth(slow) << "x\n";
  out << "fast growth per unit: " << mean_growth(fast) << "x\n";
  if (args.series_rank > 0) out << "series r=" << args.series_rank << ": " << series_seconds << " s\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup sums of finite abelian p-groups and their generating series", "abzeta"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  SigmaArgs sigma;
  auto* sigma_cmd = app.add_subcommand("sigma", "sigma_a([p; f_1, ..., f_r])");
  sigma_cmd->add_option("--p", sigma.p, "Prime p")->required();
  sigma_cmd->add_option("--a", sigma.a, "Integer exponent a");
  sigma_cmd->add_option("--f", sigma.f, "Comma-separated increments f_1,...,f_r")->required();
  sigma_cmd->add_option("--method", sigma.method, "oracle|slow|fast|closed|all")
      ->check(CLI::IsMember({"oracle", "slow", "fast", "closed", "all"}));
  sigma_cmd->add_flag("--poly", sigma.poly, "Also print the polynomial in p and q");
  sigma_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  SeriesArgs series;
  auto* series_cmd = app.add_subcommand("series", "A_r = B_r * Q_{r,a} and the factors of B_r");
  series_cmd->add_option("--rank", series.rank, "Rank r")->required();
  series_cmd->add_flag("--det", series.det, "Substitute X_t -> X^(r-t+1)");
  series_cmd->add_flag("--q1", series.q1, "Set q = 1 (a = 0)");
  series_cmd->add_option("--route", series.route, "recursive|direct");
  series_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the oracle grid, route equality and golden identities");
  verify_cmd->add_option("--rank-max", verify.rank_max, "Largest rank for golden identities");
  verify_cmd->add_option("--fsum-max", verify.fsum_max, "Largest sum of increments in the grid");
  verify_cmd->add_option("--pset", verify.pset, "Primes, e.g. 2,3");
  verify_cmd->add_option("--aset", verify.aset, "Exponents a, e.g. -2..3");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--golden-only", verify.golden_only, "Skip the oracle grid");
  verify_cmd->add_option("--golden-dir", verify.golden_dir, "Directory of golden identity files");
  verify_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  DirichletArgs dirichlet;
  auto* dirichlet_cmd = app.add_subcommand("dirichlet", "p-factor of D_{r,a}(s), exactly");
  dirichlet_cmd->add_option("--rank", dirichlet.rank, "Rank r")->required();
  dirichlet_cmd->add_option("--a", dirichlet.a, "Integer exponent a");
  dirichlet_cmd->add_option("--p", dirichlet.p, "Prime p")->required();
  dirichlet_cmd->add_option("--s", dirichlet.s, "Rational s")->required();
  dirichlet_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Wall time of the three sigma recursions");
  bench_cmd->add_option("--rank", bench.rank, "Rank r");
  bench_cmd->add_option("--fsum", bench.fsum, "Largest sum of increments");
  bench_cmd->add_option("--fsum-min", bench.fsum_min, "Smallest sum of increments");
  bench_cmd->add_option("--repeats", bench.repeats, "Best-of repeats");
  bench_cmd->add_option("--series-rank", bench.series_rank, "Also time series construction at this rank");
  bench_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (*sigma_cmd) return cmd_sigma(sigma, json, out);
    if (*series_cmd) return cmd_series(series, json, out);
    if (*verify_cmd) return cmd_verify(verify, json, out);
    if (*dirichlet_cmd) return cmd_dirichlet(dirichlet, json, out);
    if (*bench_cmd) return cmd_bench(bench, json, out);
  } catch (const NotDivisible& e) {
    err << "identity violated: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const NonIntegerCoefficient& e) {
    err << "identity violated: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace abzeta
