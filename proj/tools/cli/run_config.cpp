#include "run_config.hpp"

#include <cmath>
#include <cstdlib>

namespace pasai::cli {

void RunConfig::validate() const {
  if (precision_bits < 64) throw UsageError("--prec must be at least 64");
  if (tolerance_exp < 6) throw UsageError("--tol must be at least 6");
  if (p < 3 || p % 2 == 0) throw UsageError("--p must be an odd prime");
  if (j < 0) throw UsageError("--j must be nonnegative");
  if (N < 1) throw UsageError("--N must be positive");
  if (R < 1) throw UsageError("--R must be positive");
  if (parallelism < 0) throw UsageError("--parallelism must be nonnegative");
}

double RunConfig::tolerance() const { return std::pow(10.0, -tolerance_exp); }

Rational RunConfig::s_value(int weight) const {
  std::string t;
  for (char c : s)
    if (c != ' ') t += c;
  Rational base = 0;
  if (!t.empty() && t[0] == 'k') {
    base = weight;
    t.erase(0, 1);
    if (t.empty()) return base;
    if (t[0] == '+') t.erase(0, 1);
    else if (t[0] != '-') throw UsageError("--s: expected k+<offset>, got '" + s + "'");
  }
  try {
    Rational v = base + parse_rational(t);
    v.canonicalize();
    return v;
  } catch (const std::exception&) {
    throw UsageError("--s: cannot parse '" + s + "'");
  }
}

long default_precision() {
  if (const char* env = std::getenv("PASAI_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw UsageError(std::string("PASAI_PRECISION is not a positive integer: ") + env);
  }
  return 128;
}

std::string default_cache_path() {
  if (const char* env = std::getenv("PASAI_CACHE")) return env;
  return "pasai_cache.json";
}

}  // namespace pasai::cli
