#include "pasai/arith/valuation.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"

namespace pasai {

namespace {

BigInt mod_pk(const BigInt& a, const BigInt& pk) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), pk.get_mpz_t());
  return r;
}

// Coefficients of f(1 - pi) for integer f, reduced mod pk.
std::vector<BigInt> shift_one_minus(const std::vector<BigInt>& f, const BigInt& pk) {
  std::vector<BigInt> out(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t k = 0; k <= i; ++k) {
      BigInt term = f[i] * binomial(static_cast<unsigned>(i), static_cast<unsigned>(k));
      if (k % 2) term = -term;
      out[k] += term;
    }
  }
  for (auto& c : out) c = mod_pk(c, pk);
  return out;
}

// Valuation of sum c_i pi^i after reduction by the Eisenstein polynomial;
// nullopt when every coefficient vanishes mod pk.
std::optional<Rational> pi_basis_valuation(std::vector<BigInt> y, long p, long pe, long K) {
  BigInt pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(K));
  long phi = euler_phi(pe);
  const auto& cyc = cyclotomic_polynomial(pe);
  std::vector<BigInt> phi_int(cyc.begin(), cyc.end());
  std::vector<BigInt> e = shift_one_minus(phi_int, pk);
  // Leading coefficient of Phi(1 - pi) is (-1)^phi; make it monic.
  if (phi % 2) {
    for (auto& c : e) c = mod_pk(-c, pk);
  }
  std::vector<BigInt> v = shift_one_minus(y, pk);
  for (long d = static_cast<long>(v.size()) - 1; d >= phi; --d) {
    BigInt c = v[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    long shift = d - phi;
    for (long i = 0; i <= phi; ++i) {
      auto idx = static_cast<std::size_t>(i + shift);
      v[idx] = mod_pk(v[idx] - c * e[static_cast<std::size_t>(i)], pk);
    }
  }
  std::optional<Rational> best;
  for (long i = 0; i < std::min<long>(phi, static_cast<long>(v.size())); ++i) {
    const BigInt& c = v[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational frac(i, phi);
    frac.canonicalize();
    Rational val = Rational(valuation(c, static_cast<unsigned long>(p))) + frac;
    if (!best || val < *best) best = val;
  }
  if (best && *best >= K) return std::nullopt;
  return best;
}

}  // namespace

Rational padic_valuation_at(const CyclotomicNumber& x, long p, long t) {
  if (x.is_zero()) throw std::domain_error("padic_valuation of zero");
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p must be prime");
  long m = x.order();
  long pe = 1;
  while (m % p == 0) {
    m /= p;
    pe *= p;
  }
  const long mp = m;  // prime-to-p part
  if ((p - 1) % mp != 0) throw std::invalid_argument("padic_valuation: unsupported mixed order");
  if (std::gcd(mod_floor(t, mp), mp) != 1) throw std::invalid_argument("padic_valuation: t must be a unit mod m'");
  const long order = x.order();

  std::vector<BigInt> ints;
  BigInt den = 1;
  for (const auto& c : x.coeffs())
    if (c != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : x.coeffs()) ints.push_back(c.get_num() * (den / c.get_den()));
  long vden = valuation(den, static_cast<unsigned long>(p));

  // zeta_m = zeta_{p^e}^a zeta_{m'}^b with a m' + b p^e = 1.
  long a = mp == 1 ? 1 : inverse_mod(mp, pe);
  long b = mp == 1 ? 0 : inverse_mod(pe, mp);
  for (long K = 24;; K *= 2) {
    BigInt pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(K));
    BigInt omega = 1;
    if (mp > 1) {
      long g = primitive_root_prime_power(p, 1);
      omega = powmod(g, (p - 1) / mp, p);
      for (long it = 0; it < K; ++it) mpz_powm_ui(omega.get_mpz_t(), omega.get_mpz_t(), static_cast<unsigned long>(p), pk.get_mpz_t());
      mpz_powm_ui(omega.get_mpz_t(), omega.get_mpz_t(), static_cast<unsigned long>(mod_floor(t, mp)), pk.get_mpz_t());
    }
    std::vector<BigInt> y(static_cast<std::size_t>(pe), 0);
    for (std::size_t i = 0; i < ints.size(); ++i) {
      if (ints[i] == 0) continue;
      long li = static_cast<long>(i);
      long ep = mod_floor(a * li, pe);
      BigInt w = 1;
      if (mp > 1) mpz_powm_ui(w.get_mpz_t(), omega.get_mpz_t(), static_cast<unsigned long>(mod_floor(b * li, mp)), pk.get_mpz_t());
      y[static_cast<std::size_t>(ep)] = mod_pk(y[static_cast<std::size_t>(ep)] + ints[i] * w, pk);
    }
    (void)order;
    auto v = pi_basis_valuation(y, p, pe, K);
    if (v) return *v - vden;
    if (K > 4096) throw std::runtime_error("padic_valuation: precision exhausted");
  }
}

Rational padic_valuation(const CyclotomicNumber& x, long p) {
  long m = x.order();
  while (m % p == 0) m /= p;
  std::optional<Rational> best;
  for (long t = 1; t <= m; ++t) {
    if (std::gcd(t, m) != 1) continue;
    Rational v = padic_valuation_at(x, p, t);
    if (!best || v < *best) best = v;
  }
  return *best;
}

}  // namespace pasai
