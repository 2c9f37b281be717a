#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pasai::cli {

/// deviation: a formula known not to hold as written; reported, never counted
/// as a failure.
enum class Status { pass, fail, deviation };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Outcome {
  Status status = Status::fail;
  double gap = 0;
  std::string detail;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::string anchor;
  Status status = Status::fail;
  double gap = 0;
  double runtime_ms = 0;
  std::string detail;
};

struct CheckTask {
  std::string suite;
  std::string name;
  std::string anchor;
  std::function<Outcome()> run;
};

inline Outcome judge(bool ok, double gap = 0, std::string detail = {}) {
  return {ok ? Status::pass : Status::fail, gap, std::move(detail)};
}

/// Runs tasks on `parallelism` OpenMP threads (0: default). Exceptions turn
/// into failures carrying the message. Results keep task order.
std::vector<CheckResult> run_tasks(const std::vector<CheckTask>& tasks, int parallelism);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace pasai::cli
