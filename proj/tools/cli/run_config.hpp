#pragma once

#include <stdexcept>
#include <string>

#include "pasai/arith/rational.hpp"

namespace pasai::cli {

/// Bad flags, missing or malformed input. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  long p = 3;
  int j = 2;
  int k = 4;
  long N = 1;
  std::string s = "k+3";
  long R = 100000;
  long precision_bits = 128;
  int tolerance_exp = 10;  // pass iff gap < 10^-tolerance_exp
  unsigned long seed = 1;
  int parallelism = 0;     // 0: OpenMP default
  std::string eigenform_path;
  std::string gamma_table_path;
  std::string measure_path;
  std::string cache_path;

  void validate() const;
  double tolerance() const;
  /// s for weight k: "k+3", "k", an integer or a fraction.
  Rational s_value(int weight) const;
};

/// PASAI_PRECISION when set, else 128.
long default_precision();
/// PASAI_CACHE when set, else pasai_cache.json in the working directory.
std::string default_cache_path();

}  // namespace pasai::cli
