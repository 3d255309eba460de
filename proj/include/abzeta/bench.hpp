#pragma once

#include <vector>

namespace abzeta {

struct BenchRow {
  int fsum = 0;
  double slow_seconds = 0;
  double fast_seconds = 0;
  double closed_seconds = 0;
};

/// f = (n, 0, ..., 0): the homocyclic group (Z/p^n)^r, largest |F| for a
/// given sum of increments.
std::vector<int> bench_shape(int rank, int fsum);

/// Best-of-`repeats` wall time per call of each sigma method for
/// fsum_min..fsum_max (calls are batched to at least 2 ms per measurement).
std::vector<BenchRow> bench_sigma(int rank, int fsum_min, int fsum_max, int repeats = 3);

/// Geometric mean of t[i+1] / t[i].
double mean_growth(const std::vector<double>& times);

/// Wall time of building and normalizing Q_{r,a} (both routes).
double time_series_construction(int rank);

}  // namespace abzeta
