#include "pasai/kernels/power_sum.hpp"

#include <omp.h>

#include <atomic>

namespace pasai::kernels {

namespace {

std::atomic<int> g_threads{0};

// w * n^{-s} accumulated into acc.
void accumulate(BigComplex& acc, unsigned long n, const BigComplex& s, const BigFloat& neg_re, const Rational* w, long prec, BigFloat& tmp, BigFloat& lg) {
  const bool real = s.im().is_zero();
  mpfr_ui_pow(tmp.raw(), n, neg_re.raw(), MPFR_RNDN);
  if (w) {
    mpfr_mul_q(tmp.raw(), tmp.raw(), w->get_mpq_t(), MPFR_RNDN);
  }
  if (real) {
    acc += BigComplex(tmp, BigFloat(0L, prec));
    return;
  }
  mpfr_set_ui(lg.raw(), n, MPFR_RNDN);
  mpfr_log(lg.raw(), lg.raw(), MPFR_RNDN);
  BigFloat angle = -(s.im() * lg);
  acc += BigComplex(tmp * cos(angle), tmp * sin(angle));
}

std::vector<BigComplex> run_range(const PowerSumTask& task, long lo, long hi) {
  std::vector<BigComplex> out(static_cast<std::size_t>(task.buckets), BigComplex(task.prec));
  BigFloat tmp(task.prec), lg(task.prec);
  const BigFloat neg_re = -task.s.re();
  for (long n = lo; n < hi; ++n) {
    int b = task.bucket[static_cast<std::size_t>(n)];
    if (b < 0) continue;
    const Rational* w = task.weights.empty() ? nullptr : &task.weights[static_cast<std::size_t>(n)];
    if (w && *w == 0) continue;
    accumulate(out[static_cast<std::size_t>(b)], static_cast<unsigned long>(n), task.s, neg_re, w, task.prec, tmp, lg);
  }
  return out;
}

}  // namespace

std::vector<BigComplex> bucketed_power_sum_serial(const PowerSumTask& task) {
  return run_range(task, 1, static_cast<long>(task.bucket.size()));
}

std::vector<BigComplex> bucketed_power_sum(const PowerSumTask& task) {
  const long end = static_cast<long>(task.bucket.size());
  int threads = g_threads.load();
  if (threads <= 0) threads = omp_get_max_threads();
  std::vector<std::vector<BigComplex>> partial(static_cast<std::size_t>(threads));
#pragma omp parallel num_threads(threads)
  {
    int t = omp_get_thread_num();
    int nt = omp_get_num_threads();
    long chunk = (end - 1 + nt - 1) / nt;
    long lo = 1 + t * chunk;
    long hi = std::min(end, lo + chunk);
    partial[static_cast<std::size_t>(t)] = lo < hi ? run_range(task, lo, hi) : std::vector<BigComplex>(static_cast<std::size_t>(task.buckets), BigComplex(task.prec));
  }
  std::vector<BigComplex> out(static_cast<std::size_t>(task.buckets), BigComplex(task.prec));
  for (const auto& part : partial) {
    if (part.empty()) continue;
    for (std::size_t b = 0; b < out.size(); ++b) out[b] += part[b];
  }
  return out;
}

void set_parallelism(int threads) { g_threads.store(threads); }

int parallelism() {
  int t = g_threads.load();
  return t > 0 ? t : omp_get_max_threads();
}

}  // namespace pasai::kernels
