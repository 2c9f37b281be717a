#pragma once

#include <vector>

#include "pasai/arith/bigfloat.hpp"
#include "pasai/arith/rational.hpp"

namespace pasai::kernels {

/// Inputs for a bucketed Dirichlet power sum over 1 <= n <= R.
/// bucket[n] < 0 skips n; weights, when non-empty, multiply n^{-s}.
struct PowerSumTask {
  std::vector<int> bucket;  // size R + 1, entry 0 unused
  int buckets = 1;
  std::vector<Rational> weights;
  BigComplex s;
  long prec = 128;
};

/// S[b] = sum_{bucket[n] = b} w(n) n^{-s}. Straight loop, kept as the reference.
std::vector<BigComplex> bucketed_power_sum_serial(const PowerSumTask& task);

/// Same sums with the range split across OpenMP threads; per-thread partials
/// are combined in thread order.
std::vector<BigComplex> bucketed_power_sum(const PowerSumTask& task);

/// Thread count used by the parallel kernels (0 keeps the OpenMP default).
void set_parallelism(int threads);
int parallelism();

}  // namespace pasai::kernels
