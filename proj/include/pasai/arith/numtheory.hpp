#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pasai {

using Factorization = std::vector<std::pair<long, int>>;

Factorization factorize(long n);
bool is_prime(long n);
long euler_phi(long n);
int mobius(long n);
std::vector<long> divisors(long n);
long lcm_of(long a, long b);
long ipow(long base, int e);
long powmod(long base, long e, long m);
/// Inverse of a modulo m; throws if gcd(a, m) != 1.
long inverse_mod(long a, long m);
/// Smallest primitive root modulo an odd prime power p^e.
long primitive_root_prime_power(long p, int e);
/// Multiplicative order of a modulo m (a a unit).
long multiplicative_order(long a, long m);
/// Kronecker symbol (a | n) for n > 0.
int kronecker(long a, long n);

/// Sieved arithmetic functions on [0, bound].
class ArithTables {
 public:
  explicit ArithTables(long bound);

  long bound() const { return bound_; }
  int mobius(long n) const { return mu_.at(static_cast<std::size_t>(n)); }
  long phi(long n) const { return phi_.at(static_cast<std::size_t>(n)); }
  long smallest_factor(long n) const { return spf_.at(static_cast<std::size_t>(n)); }
  const std::vector<long>& primes() const { return primes_; }
  const std::vector<int>& mobius_table() const { return mu_; }

 private:
  long bound_;
  std::vector<int> mu_;
  std::vector<long> phi_;
  std::vector<long> spf_;
  std::vector<long> primes_;
};

}  // namespace pasai
