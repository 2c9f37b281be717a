#pragma once

#include <string>
#include <vector>

#include "checks.hpp"
#include "run_config.hpp"

namespace pasai::cli {

const std::vector<std::string>& suite_names();

/// Tasks for one suite or "all". Loads the input files the suite needs and
/// throws UsageError when they are missing or malformed.
std::vector<CheckTask> build_suite(const std::string& suite, const RunConfig& cfg);

/// Full Kummer and glue sweep over a measure table file.
std::vector<CheckTask> build_kummer_tasks(const std::string& measure_path, long p, int j, int depth,
                                          unsigned long seed);

}  // namespace pasai::cli
