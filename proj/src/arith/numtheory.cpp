#include "pasai/arith/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pasai/arith/rational.hpp"

namespace pasai {

Factorization factorize(long n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    int e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    f.emplace_back(q, e);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long euler_phi(long n) {
  long r = n;
  for (auto [q, e] : factorize(n)) r = r / q * (q - 1);
  return r;
}

int mobius(long n) {
  int s = 1;
  for (auto [q, e] : factorize(n)) {
    if (e > 1) return 0;
    s = -s;
  }
  return s;
}

std::vector<long> divisors(long n) {
  std::vector<long> d{1};
  for (auto [q, e] : factorize(n)) {
    std::size_t sz = d.size();
    long qk = 1;
    for (int k = 1; k <= e; ++k) {
      qk *= q;
      for (std::size_t i = 0; i < sz; ++i) d.push_back(d[i] * qk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

long lcm_of(long a, long b) { return a / std::gcd(a, b) * b; }

long ipow(long base, int e) {
  long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

long powmod(long base, long e, long m) {
  if (m == 1) return 0;
  __int128 r = 1, b = mod_floor(base, m);
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<long>(r);
}

long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, r = mod_floor(a, m);
  while (r != 0) {
    long q = g / r;
    std::tie(g, r) = std::make_pair(r, g - q * r);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::domain_error("inverse_mod: not a unit");
  return mod_floor(x, m);
}

long multiplicative_order(long a, long m) {
  if (m == 1) return 1;
  long phi = euler_phi(m);
  long ord = phi;
  for (auto [q, e] : factorize(phi)) {
    while (ord % q == 0 && powmod(a, ord / q, m) == 1) ord /= q;
  }
  return ord;
}

long primitive_root_prime_power(long p, int e) {
  long m = ipow(p, e);
  long phi = euler_phi(m);
  for (long g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    if (multiplicative_order(g, m) == phi) return g;
  }
  if (m == 2) return 1;
  throw std::domain_error("no primitive root");
}

int kronecker(long a, long n) {
  if (n <= 0) throw std::invalid_argument("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    long r = mod_floor(a, 8);
    if (r == 0 || r == 2 || r == 4 || r == 6) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  a = mod_floor(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

ArithTables::ArithTables(long bound) : bound_(bound) {
  if (bound < 1) throw std::invalid_argument("ArithTables: bound must be positive");
  auto n = static_cast<std::size_t>(bound) + 1;
  mu_.assign(n, 1);
  phi_.resize(n);
  spf_.assign(n, 0);
  std::iota(phi_.begin(), phi_.end(), 0L);
  mu_[0] = 0;
  for (long i = 2; i <= bound; ++i) {
    if (spf_[i] != 0) continue;
    primes_.push_back(i);
    for (long k = i; k <= bound; k += i) {
      if (spf_[k] == 0) spf_[k] = i;
      phi_[k] -= phi_[k] / i;
      mu_[k] = -mu_[k];
    }
    if (i <= bound / i)
      for (long k = i * i; k <= bound; k += i * i) mu_[k] = 0;
  }
  if (bound >= 1) spf_[1] = 1;
}

}  // namespace pasai
