#include "pasai/arith/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"

namespace pasai {

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const QPoly& a) { return static_cast<long>(a.size()) - 1; }

QPoly poly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_scale(const QPoly& a, const Rational& c) {
  if (c == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  QPoly r(a);
  trim(r);
  long db = degree(b);
  if (degree(r) < db) return {{}, r};
  QPoly q(static_cast<std::size_t>(degree(r) - db + 1));
  Rational inv_lc = 1 / b.back();
  while (degree(r) >= db) {
    long shift = degree(r) - db;
    Rational c = r.back() * inv_lc;
    q[static_cast<std::size_t>(shift)] = c;
    for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(i + shift)] -= c * b[static_cast<std::size_t>(i)];
    r.pop_back();
    trim(r);
  }
  trim(q);
  return {q, r};
}

Rational poly_eval(const QPoly& a, const Rational& x) {
  Rational r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
  return r;
}

ExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b) {
  QPoly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  QPoly s0{Rational(1)}, s1{}, t0{}, t1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    QPoly t2 = poly_sub(t0, poly_mul(q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  Rational inv = 1 / r0.back();
  return {poly_scale(r0, inv), poly_scale(s0, inv), poly_scale(t0, inv)};
}

Rational resultant(const QPoly& a_in, const QPoly& b_in) {
  QPoly a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Rational acc = 1;
  while (true) {
    long da = degree(a), db = degree(b);
    if (db == 0) {
      Rational lc = b[0];
      return acc * rational_pow(lc, da);
    }
    if (da == 0) {
      return acc * rational_pow(a[0], db);
    }
    QPoly r = poly_divmod(a, b).second;
    if (r.empty()) return 0;
    long dr = degree(r);
    if ((da * db) % 2 != 0) acc = -acc;
    acc *= rational_pow(b.back(), da - dr);
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

// Multiply by (x^d - 1) in place.
void mul_xd_minus_one(std::vector<long>& p, long d) {
  std::vector<long> r(p.size() + static_cast<std::size_t>(d), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    r[i + static_cast<std::size_t>(d)] += p[i];
    r[i] -= p[i];
  }
  p = std::move(r);
}

// Exact division by (x^d - 1).
void div_xd_minus_one(std::vector<long>& p, long d) {
  auto n = static_cast<long>(p.size()) - 1;
  std::vector<long> q(static_cast<std::size_t>(n - d + 1), 0);
  std::vector<long> r = p;
  for (long i = n; i >= d; --i) {
    long c = r[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - d)] = c;
    r[static_cast<std::size_t>(i)] -= c;
    r[static_cast<std::size_t>(i - d)] += c;
  }
  p = std::move(q);
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long m) {
  if (m <= 0) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  static std::mutex mu;
  static std::map<long, std::unique_ptr<std::vector<long>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return *it->second;
  std::vector<long> p{1};
  auto ds = divisors(m);
  for (long d : ds)
    if (mobius(m / d) == 1) mul_xd_minus_one(p, d);
  for (long d : ds)
    if (mobius(m / d) == -1) div_xd_minus_one(p, d);
  auto& slot = cache[m];
  slot = std::make_unique<std::vector<long>>(std::move(p));
  return *slot;
}

QPoly cyclotomic_qpoly(long m) {
  const auto& c = cyclotomic_polynomial(m);
  QPoly r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = c[i];
  return r;
}

}  // namespace pasai
