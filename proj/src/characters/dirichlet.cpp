#include "pasai/characters/dirichlet.hpp"

#include <numeric>
#include <stdexcept>

#include "pasai/arith/bernoulli.hpp"
#include "pasai/arith/numtheory.hpp"
#include "pasai/arith/valuation.hpp"
#include "pasai/kernels/power_sum.hpp"

namespace pasai {

namespace {

struct Component {
  long generator;  // mod M
  long order;
};

// Generators of (Z/M)^x with their orders, and the discrete log of every unit
// as a vector of exponents (empty for non-units).
struct UnitGroup {
  std::vector<Component> gens;
  std::vector<std::vector<long>> dlog;
};

long crt_lift(long g, long qe, long M) {
  long rest = M / qe;
  // x = g mod qe, x = 1 mod rest
  if (rest == 1) return mod_floor(g, qe);
  long t = mod_floor((g - 1) * inverse_mod(rest, qe), qe);
  return mod_floor(1 + rest * t, M);
}

UnitGroup unit_group(long M) {
  UnitGroup G;
  struct Local {
    long qe;
    std::vector<long> orders;
    std::vector<std::vector<long>> logs;  // residue mod qe -> exponents
  };
  std::vector<Local> locals;
  for (auto [q, e] : factorize(M)) {
    Local L;
    L.qe = ipow(q, e);
    L.logs.assign(static_cast<std::size_t>(L.qe), {});
    if (q != 2) {
      long g = primitive_root_prime_power(q, e);
      long n = euler_phi(L.qe);
      L.orders = {n};
      G.gens.push_back({crt_lift(g, L.qe, M), n});
      long x = 1;
      for (long i = 0; i < n; ++i) {
        L.logs[static_cast<std::size_t>(x)] = {i};
        x = x * g % L.qe;
      }
    } else if (e == 2) {
      L.orders = {2};
      G.gens.push_back({crt_lift(3, 4, M), 2});
      L.logs[1] = {0};
      L.logs[3] = {1};
    } else if (e >= 3) {
      long n = L.qe / 4;
      L.orders = {2, n};
      G.gens.push_back({crt_lift(L.qe - 1, L.qe, M), 2});
      G.gens.push_back({crt_lift(5, L.qe, M), n});
      long x = 1;
      for (long i = 0; i < n; ++i) {
        L.logs[static_cast<std::size_t>(x)] = {0, i};
        L.logs[static_cast<std::size_t>(L.qe - x)] = {1, i};
        x = x * 5 % L.qe;
      }
    } else {
      L.logs[1] = {};
    }
    locals.push_back(std::move(L));
  }
  G.dlog.assign(static_cast<std::size_t>(M), {});
  for (long a = 0; a < M; ++a) {
    if (std::gcd(a, M) != 1) continue;
    std::vector<long> x;
    for (const auto& L : locals) {
      const auto& part = L.logs[static_cast<std::size_t>(a % L.qe)];
      x.insert(x.end(), part.begin(), part.end());
    }
    G.dlog[static_cast<std::size_t>(a)] = std::move(x);
  }
  return G;
}

bool is_unit_table_entry(long e) { return e >= 0; }

}  // namespace

DirichletCharacter DirichletCharacter::trivial(long modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<long> exps(static_cast<std::size_t>(modulus));
  for (long a = 0; a < modulus; ++a) exps[static_cast<std::size_t>(a)] = std::gcd(a, modulus) == 1 ? 0 : -1;
  return from_exponents(modulus, 1, std::move(exps));
}

DirichletCharacter DirichletCharacter::from_exponents(long modulus, long order, std::vector<long> exps) {
  if (modulus < 1 || order < 1 || static_cast<long>(exps.size()) != modulus)
    throw std::invalid_argument("from_exponents: bad shape");
  long g = order;
  for (auto& e : exps) {
    if (!is_unit_table_entry(e)) continue;
    e = mod_floor(e, order);
    g = std::gcd(g, e);
  }
  DirichletCharacter chi;
  chi.modulus_ = modulus;
  chi.order_ = order / g;
  for (auto& e : exps)
    if (is_unit_table_entry(e)) e /= g;
  chi.exps_ = std::move(exps);
  return chi;
}

CyclotomicNumber DirichletCharacter::value(long a) const {
  long e = exponent(a);
  if (e < 0) return CyclotomicNumber(order_);
  return CyclotomicNumber::zeta(order_, e);
}

DirichletCharacter DirichletCharacter::conj() const { return pow(-1); }

DirichletCharacter DirichletCharacter::pow(long e) const {
  std::vector<long> out = exps_;
  for (auto& x : out)
    if (x >= 0) x = mod_floor(x * mod_floor(e, order_), order_);
  return from_exponents(modulus_, order_, std::move(out));
}

DirichletCharacter DirichletCharacter::induce(long new_modulus) const {
  if (new_modulus % modulus_ != 0) throw std::invalid_argument("induce: target must be a multiple of the modulus");
  std::vector<long> out(static_cast<std::size_t>(new_modulus));
  for (long a = 0; a < new_modulus; ++a)
    out[static_cast<std::size_t>(a)] = std::gcd(a, new_modulus) == 1 ? exponent(a) : -1;
  return from_exponents(new_modulus, order_, std::move(out));
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus_ != b.modulus_) throw std::invalid_argument("character product: modulus mismatch");
  long L = lcm_of(a.order_, b.order_);
  std::vector<long> out(a.exps_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (a.exps_[i] < 0) {
      out[i] = -1;
      continue;
    }
    out[i] = a.exps_[i] * (L / a.order_) + b.exps_[i] * (L / b.order_);
  }
  return DirichletCharacter::from_exponents(a.modulus_, L, std::move(out));
}

std::vector<DirichletCharacter> enumerate_characters(long M) {
  if (M < 1) throw std::invalid_argument("enumerate_characters: M must be positive");
  UnitGroup G = unit_group(M);
  long L = 1;
  for (const auto& c : G.gens) L = lcm_of(L, c.order);
  std::vector<DirichletCharacter> out;
  std::vector<long> tuple(G.gens.size(), 0);
  while (true) {
    std::vector<long> exps(static_cast<std::size_t>(M), -1);
    for (long a = 0; a < M; ++a) {
      const auto& x = G.dlog[static_cast<std::size_t>(a)];
      if (std::gcd(a, M) != 1) continue;
      long e = 0;
      for (std::size_t i = 0; i < x.size(); ++i) e += tuple[i] * x[i] * (L / G.gens[i].order);
      exps[static_cast<std::size_t>(a)] = mod_floor(e, L);
    }
    out.push_back(DirichletCharacter::from_exponents(M, L, std::move(exps)));
    std::size_t i = 0;
    for (; i < tuple.size(); ++i) {
      if (++tuple[i] < G.gens[i].order) break;
      tuple[i] = 0;
    }
    if (i == tuple.size()) break;
  }
  return out;
}

long conductor(const DirichletCharacter& chi) {
  const long M = chi.modulus();
  for (long d : divisors(M)) {
    bool ok = true;
    for (long a = 1; a < M && ok; a += d)
      if (std::gcd(a, M) == 1 && chi.exponent(a) != 0) ok = false;
    if (ok) return d;
  }
  return M;
}

DirichletCharacter primitive_character(const DirichletCharacter& chi) {
  const long C = conductor(chi);
  const long M = chi.modulus();
  std::vector<long> exps(static_cast<std::size_t>(C), -1);
  for (long b = 0; b < C; ++b) {
    if (std::gcd(b, C) != 1) continue;
    long a = b;
    while (std::gcd(a, M) != 1) a += C;
    exps[static_cast<std::size_t>(b)] = chi.exponent(a);
  }
  return DirichletCharacter::from_exponents(C, chi.order(), std::move(exps));
}

GaussSumResult gauss_sum(const DirichletCharacter& chi) {
  DirichletCharacter prim = primitive_character(chi);
  const long C = prim.modulus();
  const long ord = prim.order();
  const long L = lcm_of(C, ord);
  std::vector<long> counts(static_cast<std::size_t>(L), 0);
  for (long a = 0; a < C; ++a) {
    long e = prim.exponent(a);
    if (e < 0) continue;
    ++counts[static_cast<std::size_t>(mod_floor(e * (L / ord) + a * (L / C), L))];
  }
  return {CyclotomicNumber::from_exponent_counts(L, counts), C};
}

GeneralizedGaussSum generalized_gauss_sum(const DirichletCharacter& chi, long M, long p, int j) {
  if (!is_prime(p) || j < 0) throw std::invalid_argument("generalized_gauss_sum: need prime p and j >= 0");
  DirichletCharacter prim = primitive_character(chi);
  const long C = prim.modulus();
  int jchi = 0;
  for (long c = C; c > 1; c /= p) {
    if (c % p != 0) throw std::invalid_argument("generalized_gauss_sum: conductor is not a power of p");
    ++jchi;
  }
  if (jchi > j) throw std::invalid_argument("generalized_gauss_sum: j < j_chi");
  const long pj = ipow(p, j);
  const long ord = prim.order();
  const long L = lcm_of(pj, ord);
  const long Mr = mod_floor(M, pj);
  std::vector<long> counts(static_cast<std::size_t>(L), 0);
  for (long a = 0; a < pj; ++a) {
    if (a % p == 0) continue;
    long e = prim.exponent(a);
    ++counts[static_cast<std::size_t>(mod_floor(e * (L / ord) + (a * Mr % pj) * (L / pj), L))];
  }
  GeneralizedGaussSum out;
  out.direct = CyclotomicNumber::from_exponent_counts(L, counts);
  const long d = ipow(p, j - jchi);
  if (M % d != 0 || (M / d) % p == 0) {
    out.closed_form = CyclotomicNumber(L);
  } else {
    out.closed_form = gauss_sum(prim).value * prim.conj().value(M / d) * Rational(d);
  }
  out.matches = out.direct == out.closed_form;
  return out;
}

CyclotomicNumber generalized_bernoulli(unsigned k, const DirichletCharacter& psi) {
  if (k < 1) throw std::invalid_argument("generalized_bernoulli: k >= 1");
  DirichletCharacter prim = primitive_character(psi);
  const long C = prim.modulus();
  const long ord = prim.order();
  std::vector<Rational> c(static_cast<std::size_t>(ord), 0);
  for (long a = 0; a < C; ++a) {
    long e = prim.exponent(a);
    if (e < 0) continue;
    Rational x(a, C);
    x.canonicalize();
    c[static_cast<std::size_t>(e)] += bernoulli_polynomial(k, x);
  }
  Rational scale = rational_pow(Rational(C), static_cast<long>(k) - 1);
  for (auto& x : c) x *= scale;
  return CyclotomicNumber::from_powers(ord, c);
}

BigComplex TranscendentalValue::evaluate(long prec) const {
  BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
  BigComplex f = pow(BigComplex(BigFloat(0L, prec), two_pi), two_pi_i_power);
  return embed_complex(algebraic, prec) * f;
}

TranscendentalValue L_special_exact(unsigned k, const DirichletCharacter& psi) {
  if (k < 2 || k % 2 != 0) throw std::domain_error("L_special_exact: k must be even and >= 2");
  if (!psi.is_even()) throw std::domain_error("L_special_exact: psi must be even");
  DirichletCharacter prim = primitive_character(psi);
  const long C = prim.modulus();
  CyclotomicNumber G = gauss_sum(prim).value;
  CyclotomicNumber B = generalized_bernoulli(k, prim.conj());
  Rational denom = Rational(2) * Rational(factorial(k)) * rational_pow(Rational(C), k);
  TranscendentalValue out;
  out.two_pi_i_power = k;
  out.algebraic = -(G * B) * Rational(1 / denom);
  return out;
}

namespace {

LTruncation l_truncated_impl(const BigComplex& s, const DirichletCharacter& psi, long R, long prec, bool parallel) {
  if (s.re() <= BigFloat(1L, prec)) throw std::domain_error("L_truncated: Re(s) must exceed 1");
  if (R < 1) throw std::invalid_argument("L_truncated: R >= 1");
  kernels::PowerSumTask task;
  task.buckets = static_cast<int>(psi.order());
  task.bucket.assign(static_cast<std::size_t>(R + 1), -1);
  for (long n = 1; n <= R; ++n) task.bucket[static_cast<std::size_t>(n)] = static_cast<int>(psi.exponent(n));
  task.s = s;
  task.prec = prec;
  auto sums = parallel ? kernels::bucketed_power_sum(task) : kernels::bucketed_power_sum_serial(task);
  BigComplex total(prec);
  for (long e = 0; e < psi.order(); ++e)
    total += sums[static_cast<std::size_t>(e)] * BigComplex::unit_root(e, psi.order(), prec);
  BigFloat sigma1 = s.re() - BigFloat(1L, prec);
  BigFloat tail = pow(BigFloat(R, prec), -sigma1) / sigma1;
  return {total, tail};
}

}  // namespace

LTruncation L_truncated(const BigComplex& s, const DirichletCharacter& psi, long R, long prec) {
  return l_truncated_impl(s, psi, R, prec, true);
}

LTruncation L_truncated_serial(const BigComplex& s, const DirichletCharacter& psi, long R, long prec) {
  return l_truncated_impl(s, psi, R, prec, false);
}

NormalizedL normalized_L(const DirichletCharacter& chi, unsigned k) {
  DirichletCharacter psi = chi.pow(2).conj();
  if (conductor(psi) != psi.modulus()) throw std::domain_error("normalized_L: conj(chi)^2 is imprimitive");
  if (!psi.is_even()) throw std::domain_error("normalized_L: conj(chi)^2 must be even");
  TranscendentalValue L = L_special_exact(k, psi);
  CyclotomicNumber G = gauss_sum(psi).value;
  NormalizedL out;
  out.value = L.algebraic * G.inverse() * Rational((k / 2) % 2 ? -1 : 1);
  out.conductor = conductor(chi);
  const long M = chi.modulus();
  if (M > 1) {
    auto f = factorize(M);
    if (f.size() == 1) {
      long p = f[0].first;
      for (long c = out.conductor; c > 1; c /= p) ++out.j_chi;
      out.valuation_bound = -out.j_chi * (static_cast<long>(k) + 1);
      if (!out.value.is_zero()) out.valuation = padic_valuation(out.value, p);
    }
  }
  return out;
}

}  // namespace pasai
