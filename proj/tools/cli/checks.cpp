#include "checks.hpp"

#include <omp.h>

#include <chrono>
#include <stdexcept>

namespace pasai::cli {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "deviation";
  }
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "deviation") return Status::deviation;
  throw std::invalid_argument("unknown status '" + s + "'");
}

std::vector<CheckResult> run_tasks(const std::vector<CheckTask>& tasks, int parallelism) {
  std::vector<CheckResult> out(tasks.size());
  int threads = parallelism > 0 ? parallelism : omp_get_max_threads();
  const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long i = 0; i < n; ++i) {
    const auto& task = tasks[static_cast<std::size_t>(i)];
    CheckResult r;
    r.suite = task.suite;
    r.name = task.name;
    r.anchor = task.anchor;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = task.run();
      r.status = o.status;
      r.gap = o.gap;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.status = Status::fail;
      r.detail = std::string("exception: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out[static_cast<std::size_t>(i)] = std::move(r);
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (r.status == Status::fail) return false;
  return true;
}

}  // namespace pasai::cli
