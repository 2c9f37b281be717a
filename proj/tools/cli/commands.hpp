#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"

namespace pasai::cli {

/// Exit codes shared by every command.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out);
int cmd_eisenstein(const RunConfig& cfg, long T, const std::string& out_path, std::ostream& out);
int cmd_kummer(const std::string& measure_path, const RunConfig& cfg, int depth, std::ostream& out);
int cmd_report(const std::string& cache_path, const std::string& out_path, const std::string& format,
               bool with_runtime, std::ostream& out);

}  // namespace pasai::cli
