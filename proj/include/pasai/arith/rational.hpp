#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace pasai {

/// Arbitrary-precision integer (GMP).
using BigInt = mpz_class;

/// Exact rational, always canonical: lowest terms, positive denominator.
using Rational = mpq_class;

/// Parses "num/den" or "num". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
Rational rational_pow(const Rational& q, long e);

/// p-adic valuation of a nonzero integer.
long valuation(const BigInt& z, unsigned long p);
/// p-adic valuation of a nonzero rational, v(num) - v(den).
long valuation(const Rational& q, unsigned long p);

constexpr long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace pasai
