#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "checks.hpp"

namespace pasai::cli {

/// Cached results of earlier runs; empty when the file is absent.
std::vector<CheckResult> load_cache(const std::string& path);
/// Replaces records with the same (suite, name) and appends the rest.
void merge_into_cache(const std::string& path, const std::vector<CheckResult>& results);

void write_csv(std::ostream& out, const std::vector<CheckResult>& results, bool with_runtime = true);
std::vector<CheckResult> parse_csv(std::istream& in);
void write_json(std::ostream& out, const std::vector<CheckResult>& results, bool with_runtime = true);

/// One line per check for the terminal.
void print_results(std::ostream& out, const std::vector<CheckResult>& results);

}  // namespace pasai::cli
