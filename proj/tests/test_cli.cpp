#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "abzeta/cli.hpp"
#include "abzeta/golden.hpp"

using namespace abzeta;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path snapshot(const std::string& name) { return default_golden_dir() / "cli" / name; }

}  // namespace

TEST_CASE("sigma subcommand") {
  Run r = run({"sigma", "--p", "2", "--a", "-1", "--f", "1,1", "--poly"});
  CHECK(r.code == 0);
  CHECK(r.out == "27/8\nq^3 + (p+1)*q^2 + (p+1)*q + 1\n");

  r = run({"sigma", "--p", "3", "--a", "1", "--f", "2", "--method", "all"});
  CHECK(r.code == 0);
  CHECK(r.out.find("agreement: yes") != std::string::npos);

  r = run({"sigma", "--p", "2", "--f", "", "--method", "oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = run({"sigma", "--p", "2", "--a", "0", "--f", "1,0", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\": \"5\"") != std::string::npos);
}

TEST_CASE("error exit codes") {
  CHECK(run({"sigma", "--p", "4", "--f", "1"}).code == kExitDomain);
  CHECK(run({"sigma", "--p", "2", "--f", "1,x"}).code == kExitDomain);
  CHECK(run({"sigma", "--p", "2", "--f", "30", "--method", "oracle"}).code == kExitDomain);
  CHECK(run({"series", "--rank", "6"}).code == kExitDomain);
  CHECK(run({"dirichlet", "--rank", "1", "--p", "2", "--s", "0"}).code == kExitDomain);
  CHECK(run({"dirichlet", "--rank", "1", "--p", "2", "--s", "1/3"}).code == kExitDomain);
  CHECK(run({"sigma", "--bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("budget from the environment") {
  ::setenv("ABZETA_BUDGET", "4", 1);
  const Run r = run({"sigma", "--p", "2", "--f", "3", "--method", "oracle"});
  ::unsetenv("ABZETA_BUDGET");
  CHECK(r.code == kExitDomain);
  CHECK(run({"sigma", "--p", "2", "--f", "3", "--method", "oracle"}).code == 0);
}

TEST_CASE("dirichlet subcommand") {
  CHECK(run({"dirichlet", "--rank", "1", "--a", "0", "--p", "2", "--s", "2"}).out == "16/9\n");
  CHECK(run({"dirichlet", "--rank", "1", "--a", "1", "--p", "2", "--s", "3"}).out == "32/21\n");
}

TEST_CASE("series text output is byte-identical to snapshots") {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases = {
      {"series_r2.txt", {"series", "--rank", "2"}},
      {"series_r3_det.txt", {"series", "--rank", "3", "--det"}},
      {"series_r4_det_q1.txt", {"series", "--rank", "4", "--det", "--q1"}},
  };
  for (const auto& [file, args] : cases) {
    CAPTURE(file);
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(r.out == read_file(snapshot(file)));
  }
  CHECK(run({"series", "--rank", "3", "--det", "--route", "direct"}).out == read_file(snapshot("series_r3_det.txt")));
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"series", "--rank", "3", "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("verify subcommand") {
  Run r = run({"verify", "--golden-only", "--rank-max", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  r = run({"verify", "--rank-max", "2", "--fsum-max", "2", "--pset", "2", "--aset", "0..1", "--jobs", "2",
           "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"result\": \"PASS\"") != std::string::npos);
  CHECK(run({"verify", "--golden-dir", "/nonexistent/abzeta"}).code == kExitDomain);
}
