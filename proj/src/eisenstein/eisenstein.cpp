#include "pasai/eisenstein/eisenstein.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

#include "pasai/arith/bernoulli.hpp"
#include "pasai/arith/numtheory.hpp"
#include "pasai/arith/rational.hpp"
#include "pasai/kernels/power_sum.hpp"

namespace pasai {

namespace {

long pj_of(const LevelParams& P) { return ipow(P.p, P.j); }

bool pm_one(long v, long pj) {
  if (pj == 1) return true;
  long r = mod_floor(v, pj);
  return r == 1 || r == pj - 1;
}

// x + y sqrt(-D)
struct QuadElt {
  Rational x, y;
};

QuadElt mul(const QuadElt& a, const QuadElt& b, long D) {
  return {a.x * b.x - Rational(D) * a.y * b.y, a.x * b.y + a.y * b.x};
}
QuadElt add(const QuadElt& a, const QuadElt& b) { return {a.x + b.x, a.y + b.y}; }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool in_ring_of_integers(const QuadElt& e, long D) {
  Rational x2 = 2 * e.x, y2 = 2 * e.y;
  x2.canonicalize();
  y2.canonicalize();
  if (D % 4 == 0) return is_integer(e.x) && is_integer(y2);
  if (!is_integer(x2) || !is_integer(y2)) return false;
  BigInt diff = x2.get_num() - y2.get_num();
  return mpz_even_p(diff.get_mpz_t()) != 0;
}

using QuadMatrix = std::array<QuadElt, 4>;

QuadMatrix mat_mul(const QuadMatrix& A, const QuadMatrix& B, long D) {
  return {add(mul(A[0], B[0], D), mul(A[1], B[2], D)), add(mul(A[0], B[1], D), mul(A[1], B[3], D)),
          add(mul(A[2], B[0], D), mul(A[3], B[2], D)), add(mul(A[2], B[1], D), mul(A[3], B[3], D))};
}

long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  long x1, y1;
  long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Completes (a, c) with gcd 1 to [[a, b], [c, d]] of determinant 1.
IntMatrix2 complete(long a, long c, long shift) {
  long x, y;
  ext_gcd(a, c, x, y);  // a x + c y = 1
  IntMatrix2 g{a, -y, c, x};
  g.b += shift * a;
  g.d += shift * c;
  return g;
}

CyclotomicNumber character_sum(const DirichletCharacter& chi, const std::vector<long>& set, bool conjugate) {
  const long ord = chi.order();
  std::vector<long> counts(static_cast<std::size_t>(ord), 0);
  for (long v : set) {
    long e = chi.exponent(v);
    if (e < 0) continue;
    counts[static_cast<std::size_t>(mod_floor(conjugate ? -e : e, ord))] += 1;
  }
  return CyclotomicNumber::from_exponent_counts(ord, counts);
}

CyclotomicNumber character_value_or_zero(const DirichletCharacter& chi, long a) {
  if (chi.exponent(a) < 0) return CyclotomicNumber(1);
  return chi.value(a);
}

long cj_of(const std::vector<CyclotomicNumber>& coeffs, long p) {
  long worst = 0;
  for (const auto& z : coeffs)
    for (const auto& c : z.coeffs()) worst = std::max(worst, valuation(BigInt(c.get_den()), static_cast<unsigned long>(p)));
  return worst;
}

}  // namespace

long LevelParams::level() const { return N * ipow(p, 2 * j); }

void LevelParams::validate() const {
  if (N < 1) throw std::invalid_argument("LevelParams: N must be positive");
  if (j < 0) throw std::invalid_argument("LevelParams: j must be non-negative");
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("LevelParams: k must be even and at least 4");
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("LevelParams: p must be an odd prime");
  if (D <= 0 || (D % 4 != 0 && D % 4 != 3)) throw std::invalid_argument("LevelParams: -D must be a discriminant");
  if (N % p == 0 || D % p == 0) throw std::invalid_argument("LevelParams: p must not divide N D");
}

bool gamma0_beta_contains(const LevelParams& P, const IntMatrix2& g) {
  if (g.det() != 1) throw std::invalid_argument("gamma0_beta_contains: determinant must be 1");
  long pj = pj_of(P);
  return mod_floor(g.c, P.level()) == 0 && mod_floor(g.a - g.d, pj) == 0;
}

bool gamma0_beta_contains_conjugation(const LevelParams& P, const IntMatrix2& g, long a_rep) {
  if (g.det() != 1) throw std::invalid_argument("gamma0_beta_contains: determinant must be 1");
  long pj = pj_of(P);
  if (a_rep % 2 != 0 || std::gcd(a_rep, pj) != 1)
    throw std::invalid_argument("gamma0_beta_contains: representative must be an even unit mod p^j");
  Rational b_y(a_rep / 2, pj);
  b_y.canonicalize();
  const QuadElt zero{0, 0}, one{1, 0};
  QuadMatrix left{one, QuadElt{0, b_y}, zero, one};
  QuadMatrix right{one, QuadElt{0, -b_y}, zero, one};
  QuadMatrix G{QuadElt{g.a, 0}, QuadElt{g.b, 0}, QuadElt{g.c, 0}, QuadElt{g.d, 0}};
  QuadMatrix h = mat_mul(mat_mul(left, G, P.D), right, P.D);
  for (const auto& e : h)
    if (!in_ring_of_integers(e, P.D)) return false;
  const QuadElt& c = h[2];
  if (c.y != 0 || !is_integer(c.x)) return false;
  BigInt cz = c.x.get_num();
  return mpz_divisible_ui_p(cz.get_mpz_t(), static_cast<unsigned long>(P.N)) != 0;
}

IntMatrix2 random_unimodular(const LevelParams& P, int kind, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> U(-bound, bound);
  const long M = P.level(), pj = pj_of(P);
  for (;;) {
    long a = 0, c = 0;
    if (kind == 0) {
      a = U(rng);
      c = U(rng);
    } else if (kind == 1) {
      c = M * U(rng);
      a = U(rng);
    } else {
      c = M * U(rng);
      a = (U(rng) % 2 == 0 ? 1 : -1) + pj * U(rng);
    }
    if (std::gcd(a, c) != 1) continue;
    IntMatrix2 g = complete(a, c, U(rng));
    if (kind == 2 && c == 0) g.d = g.a;
    return g;
  }
}

std::vector<std::pair<long, long>> enumerate_lambda(const LevelParams& P, long H) {
  if (H < 1) throw std::invalid_argument("enumerate_lambda: height must be positive");
  const long M = P.level(), pj = pj_of(P);
  std::vector<std::pair<long, long>> out;
  for (long c = 0; c <= H; c += M) {
    for (long d = -H; d <= H; ++d) {
      if (c == 0 && d <= 0) continue;
      if (std::gcd(c, d) != 1 || !pm_one(d, pj)) continue;
      out.emplace_back(c, d);
    }
  }
  return out;
}

CyclotomicNumber sigma_twisted(const LevelParams& P, long v, long l) {
  const long M = P.level();
  if (l <= 0 || l % M != 0) return CyclotomicNumber(M);
  std::vector<BigInt> counts(static_cast<std::size_t>(M), 0);
  for (long d : divisors(l / M)) {
    BigInt w;
    mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(P.k - 1));
    counts[static_cast<std::size_t>(mod_floor(v * d, M))] += w;
    counts[static_cast<std::size_t>(mod_floor(-v * d, M))] += w;
  }
  return CyclotomicNumber::from_exponent_counts(M, counts);
}

EisensteinSeries::EisensteinSeries(const LevelParams& P) : P_(P) {
  P_.validate();
  M_ = P_.level();
  phi_ = euler_phi(M_);
  const long pj = pj_of(P_);
  for (long a = 0; a < M_; ++a) {
    if (std::gcd(a, M_) != 1) continue;
    units_.push_back(a);
    if (pm_one(a, pj)) V_.push_back(a);
  }
  const unsigned k = static_cast<unsigned>(P_.k);
  for (const auto& psi : enumerate_characters(M_)) {
    if (!psi.is_even()) continue;
    CyclotomicNumber A = character_sum(psi, V_, true);
    if (A.is_zero()) continue;
    DirichletCharacter prim = primitive_character(psi);
    const long C = prim.modulus();
    DirichletCharacter prim_bar = prim.conj();
    CyclotomicNumber B = generalized_bernoulli(k, prim_bar);
    if (B.is_zero()) throw std::domain_error("EisensteinSeries: vanishing generalized Bernoulli number");
    CyclotomicNumber G = gauss_sum(prim_bar).value;
    CyclotomicNumber euler(1, Rational(1));
    for (auto [q, e] : factorize(M_)) {
      (void)e;
      Rational qk(1, BigInt(ipow(q, P_.k)));
      euler *= CyclotomicNumber(1, Rational(1)) - character_value_or_zero(prim, q) * qk;
    }
    Rational scale = Rational(-2 * P_.k) * rational_pow(Rational(C, M_), P_.k) / Rational(C * phi_);
    scale.canonicalize();
    CyclotomicNumber literal = A * G * B.inverse() * scale;
    terms_.push_back({psi, literal * euler.inverse(), literal});
  }
}

CyclotomicNumber EisensteinSeries::gauss_at(const DirichletCharacter& psi, long d) const {
  const long ord = psi.order();
  const long L = lcm_of(M_, ord);
  std::vector<long> counts(static_cast<std::size_t>(L), 0);
  for (long t : units_) {
    long e = psi.exponent(t) * (L / ord) + mod_floor(t * d, M_) * (L / M_);
    counts[static_cast<std::size_t>(mod_floor(e, L))] += 1;
  }
  return CyclotomicNumber::from_exponent_counts(L, counts);
}

CyclotomicNumber EisensteinSeries::coefficient(long l, bool literal) const {
  CyclotomicNumber out(1);
  const auto ds = divisors(l);
  for (const auto& t : terms_) {
    CyclotomicNumber inner(1);
    for (long d : ds) {
      BigInt w;
      mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(P_.k - 1));
      inner += gauss_at(t.psi, d) * Rational(w);
    }
    out += (literal ? t.weight_literal : t.weight) * inner;
  }
  return out;
}

CyclotomicNumber EisensteinSeries::higher_coeff_exact(long l) const {
  if (l < 1) throw std::invalid_argument("higher_coeff_exact: index must be positive");
  return coefficient(l, false);
}

CyclotomicNumber EisensteinSeries::higher_coeff_literal(long l) const {
  if (l < 1) throw std::invalid_argument("higher_coeff_literal: index must be positive");
  return coefficient(l, true);
}

ConstantTermReport EisensteinSeries::constant_term_report() const {
  ConstantTermReport rep;
  rep.value = CyclotomicNumber(1);
  rep.off_diagonal_zero = true;
  const auto chars = enumerate_characters(M_);
  std::vector<std::pair<const DirichletCharacter*, CyclotomicNumber>> even;
  for (const auto& psi1 : chars) {
    if (!psi1.is_even()) continue;
    CyclotomicNumber A = character_sum(psi1, V_, true);
    if (!A.is_zero()) even.emplace_back(&psi1, A);
  }
  Rational inv_phi2(1, BigInt(phi_) * phi_);
  for (const auto& psi : chars) {
    DirichletCharacter psi_bar = psi.conj();
    for (const auto& [psi1, A] : even) {
      CyclotomicNumber W = A * character_sum(*psi1 * psi_bar, units_, false) * inv_phi2;
      ++rep.pairs_checked;
      if (psi == *psi1)
        rep.value += W;
      else if (!W.is_zero())
        rep.off_diagonal_zero = false;
    }
  }
  return rep;
}

const std::vector<BigFloat>& EisensteinSeries::zeta_plus(long prec, long terms, bool parallel) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto key = std::make_pair(prec, terms);
  auto it = zeta_plus_.find(key);
  if (it != zeta_plus_.end()) return it->second;
  ArithTables tables(terms);
  kernels::PowerSumTask task;
  task.buckets = static_cast<int>(M_);
  task.bucket.assign(static_cast<std::size_t>(terms + 1), -1);
  task.weights.assign(static_cast<std::size_t>(terms + 1), Rational(0));
  for (long m = 1; m <= terms; ++m) {
    int mu = tables.mobius(m);
    if (mu == 0 || std::gcd(m, M_) != 1) continue;
    task.bucket[static_cast<std::size_t>(m)] = static_cast<int>(m % M_);
    task.weights[static_cast<std::size_t>(m)] = mu;
  }
  task.s = BigComplex(BigFloat(static_cast<long>(P_.k), prec));
  task.prec = prec;
  auto sums = parallel ? kernels::bucketed_power_sum(task) : kernels::bucketed_power_sum_serial(task);
  std::vector<BigFloat> out;
  out.reserve(sums.size());
  for (auto& z : sums) out.push_back(z.re());
  return zeta_plus_.emplace(key, std::move(out)).first->second;
}

BigComplex EisensteinSeries::analytic(long l, long prec, long terms, bool parallel) const {
  if (l < 1) throw std::invalid_argument("higher_coeff_analytic: index must be positive");
  const long wp = prec + 32;
  const auto& zp = zeta_plus(wp, terms, parallel);
  std::vector<BigFloat> Z(static_cast<std::size_t>(M_), BigFloat(wp));
  for (long n : units_) {
    long ninv = inverse_mod(n, M_);
    for (long v : V_) Z[static_cast<std::size_t>(mod_floor(ninv * v, M_))] += zp[static_cast<std::size_t>(n)];
  }
  const auto ds = divisors(l);
  const BigFloat two_pi = BigFloat::pi(wp) * BigFloat(2L, wp);
  BigFloat total(wp);
  for (long w : units_) {
    const BigFloat& z = Z[static_cast<std::size_t>(w)];
    if (z.is_zero()) continue;
    BigFloat S(wp);
    for (long d : ds) {
      BigFloat angle = two_pi * BigFloat(mod_floor(w * d, M_), wp) / BigFloat(M_, wp);
      S += pow(BigFloat(d, wp), static_cast<long>(P_.k - 1)) * cos(angle) * BigFloat(2L, wp);
    }
    total += z * S;
  }
  BigFloat ck = pow(two_pi, static_cast<long>(P_.k)) / BigFloat(factorial(static_cast<unsigned>(P_.k - 1)), wp) /
                pow(BigFloat(M_, wp), static_cast<long>(P_.k));
  if ((P_.k / 2) % 2 != 0) ck = -ck;
  BigFloat a = total * ck / BigFloat(2L, wp);
  BigFloat re(prec), im(prec);
  mpfr_set(re.raw(), a.raw(), MPFR_RNDN);
  return BigComplex(re, im);
}

BigComplex EisensteinSeries::higher_coeff_analytic(long l, long prec, long terms) const {
  return analytic(l, prec, terms, true);
}

BigComplex EisensteinSeries::higher_coeff_analytic_serial(long l, long prec, long terms) const {
  return analytic(l, prec, terms, false);
}

QExpansion EisensteinSeries::classical_reduction(long T) const {
  if (P_.j != 0) throw std::invalid_argument("classical_reduction: requires j = 0");
  if (T < 0) throw std::invalid_argument("classical_reduction: negative length");
  const long N = P_.N;
  const long k = P_.k;
  Rational lead = Rational(-2 * k) / bernoulli_number(static_cast<unsigned>(k));
  lead /= Rational(BigInt(ipow(N, static_cast<int>(k))));
  for (auto [q, e] : factorize(N)) {
    (void)e;
    lead /= Rational(1) - Rational(1, BigInt(ipow(q, static_cast<int>(k))));
  }
  lead.canonicalize();
  QExpansion out;
  out.params = P_;
  out.coeffs.push_back(CyclotomicNumber(1, Rational(1)));
  for (long n = 1; n <= T; ++n) {
    BigInt s = 0;
    for (long d : divisors(n)) {
      long ramanujan = 0;
      for (long delta : divisors(std::gcd(N, d))) ramanujan += mobius(N / delta) * delta;
      BigInt w;
      mpz_ui_pow_ui(w.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
      s += w * ramanujan;
    }
    Rational c = lead * Rational(s);
    c.canonicalize();
    out.coeffs.push_back(CyclotomicNumber(1, c));
  }
  out.c_j = cj_of(out.coeffs, P_.p);
  return out;
}

QExpansion EisensteinSeries::qexpansion(long T) const {
  if (P_.j == 0) return classical_reduction(T);
  if (T < 0) throw std::invalid_argument("qexpansion: negative length");
  QExpansion out;
  out.params = P_;
  out.coeffs.assign(static_cast<std::size_t>(T + 1), CyclotomicNumber(1));
  out.coeffs[0] = constant_term();
#pragma omp parallel for schedule(dynamic)
  for (long n = 1; n <= T; ++n) out.coeffs[static_cast<std::size_t>(n)] = coefficient(n, false);
  out.c_j = cj_of(out.coeffs, P_.p);
  return out;
}

}  // namespace pasai
