#include "abzeta/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "abzeta/series.hpp"
#include "abzeta/sigma.hpp"

namespace abzeta {

namespace {

constexpr double kMinBatchSeconds = 2e-3;

// Seconds per call, best of `repeats` batches; each batch runs the body often
// enough to last kMinBatchSeconds so sub-microsecond calls are still resolved.
template <typename F>
double best_time(int repeats, F&& body) {
  using clock = std::chrono::steady_clock;
  long calls = 1;
  for (;;) {
    const auto t0 = clock::now();
    for (long i = 0; i < calls; ++i) body();
    if (std::chrono::duration<double>(clock::now() - t0).count() >= kMinBatchSeconds) break;
    calls *= 2;
  }
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, repeats); ++r) {
    const auto t0 = clock::now();
    for (long i = 0; i < calls; ++i) body();
    best = std::min(best, std::chrono::duration<double>(clock::now() - t0).count() / static_cast<double>(calls));
  }
  return best;
}

}  // namespace

std::vector<int> bench_shape(int rank, int fsum) {
  std::vector<int> f(static_cast<std::size_t>(rank), 0);
  if (rank > 0) f[0] = fsum;
  return f;
}

std::vector<BenchRow> bench_sigma(int rank, int fsum_min, int fsum_max, int repeats) {
  std::vector<BenchRow> rows;
  for (int n = fsum_min; n <= fsum_max; ++n) {
    const auto f = bench_shape(rank, n);
    const auto e = exponents_from_increments(f);
    BenchRow row;
    row.fsum = n;
    row.slow_seconds = best_time(repeats, [&] { (void)sigma_slow(e); });
    row.fast_seconds = best_time(repeats, [&] { (void)sigma_fast(f); });
    row.closed_seconds = best_time(repeats, [&] { (void)sigma_closed(f); });
    rows.push_back(row);
  }
  return rows;
}

double mean_growth(const std::vector<double>& times) {
  if (times.size() < 2 || times.front() <= 0) return 1.0;
  return std::pow(times.back() / times.front(), 1.0 / static_cast<double>(times.size() - 1));
}

double time_series_construction(int rank) {
  return best_time(1, [&] {
    (void)normalize_to_B(q_series_recursive(rank));
    (void)normalize_to_B(q_series_direct(rank));
  });
}

}  // namespace abzeta
