#include "pasai/cohomology/periods.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"

namespace pasai {

GammaCoefficientTable GammaCoefficientTable::parse(std::istream& in) {
  GammaCoefficientTable t;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    long m, l, alpha;
    std::string a, b;
    if (!(ss >> m)) continue;
    if (!(ss >> l >> alpha >> a >> b))
      throw std::invalid_argument("gamma table: malformed record on line " + std::to_string(lineno));
    Key key{m, l, alpha};
    t.a[key] = BigInt(a);
    t.b[key] = BigInt(b);
  }
  return t;
}

GammaCoefficientTable GammaCoefficientTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gamma table " + path);
  return parse(in);
}

namespace {

BigComplex i_power(long e, long prec) {
  BigFloat one(1L, prec), zero(prec);
  switch (mod_floor(e, 4)) {
    case 0: return {one, zero};
    case 1: return {zero, one};
    case 2: return {-one, zero};
    default: return {zero, -one};
  }
}

GammaFactor gamma_sum(int n, int m, const Rational& s, const std::map<GammaCoefficientTable::Key, BigInt>& tab,
                      long shift, long prec, bool strict) {
  if (m < 0 || m > n) throw std::out_of_range("gamma factor: m out of range");
  GammaFactor out;
  out.value = BigComplex(prec);
  for (long l = 0; l <= 2L * n - 2L * m; ++l) {
    for (long alpha = 0; alpha <= n + 1; ++alpha) {
      if (mod_floor(alpha - (n + 1 + m), 2) != 0) continue;
      auto it = tab.find({m, l, alpha});
      if (it == tab.end()) {
        if (strict) throw std::out_of_range("gamma table: missing entry");
        continue;
      }
      if (it->second == 0) continue;
      GammaProduct g;
      g.l = l;
      g.alpha = alpha;
      g.coefficient = it->second;
      g.weight = alpha == n + 1 ? Rational(1, 2) : Rational(1);
      g.arg1 = (Rational(n + 1 - m + alpha) + s) / 2;
      g.arg2 = (Rational(3 * n + 3 - m - alpha) + s) / 2;
      g.arg1.canonicalize();
      g.arg2.canonicalize();
      BigFloat term = gamma(BigFloat(g.arg1, prec)) * gamma(BigFloat(g.arg2, prec)) *
                      BigFloat(Rational(g.coefficient) * g.weight, prec);
      out.value += i_power(l + shift, prec) * term;
      out.products.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

GammaFactor gamma_factor_I1(int n, int m, const Rational& s, const GammaCoefficientTable& table, long prec,
                            bool strict) {
  return gamma_sum(n, m, s, table.a, 1, prec, strict);
}

GammaFactor gamma_factor_I2(int n, int m, const Rational& s, const GammaCoefficientTable& table, long prec,
                            bool strict) {
  GammaFactor g = gamma_sum(n, m, s, table.b, 0, prec, strict);
  g.reconstructed = true;
  return g;
}

BigComplex G_prime_infty(int n, int m, const Rational& s, const GammaCoefficientTable& table, long prec) {
  BigComplex I1 = gamma_factor_I1(n, m, s, table, prec).value;
  BigComplex I2 = gamma_factor_I2(n, m, s, table, prec).value;
  BigComplex total = I1 - I2 * BigFloat(2L, prec);
  BigFloat half = BigFloat(1L, prec) / BigFloat(2L, prec);
  if ((n + 1) % 2 != 0) half = -half;
  return total * half;
}

BigComplex omega_infty(int n, int m, long D, const BigComplex& G_inf_0) {
  const long prec = G_inf_0.precision();
  if (G_inf_0.abs().is_zero()) throw std::domain_error("omega_infty: G_inf(0, f) vanishes");
  BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
  BigFloat num = pow(two_pi, static_cast<long>(4 * n - 3 * m + 4)) *
                 gamma(BigFloat(static_cast<long>(2 * n - 2 * m + 2), prec));
  BigFloat den = pow(sqrt(BigFloat(D, prec)), static_cast<long>(2 * n - m + 2));
  return BigComplex(num / den) / G_inf_0;
}

PairingSeries pairing_series(const AsaiCoefficients& coeffs, int k, const Rational& b, const Rational& s_prime,
                             long prec) {
  if (s_prime <= Rational(k + 1)) throw std::invalid_argument("pairing_series: need s' > k + 1");
  const long R = coeffs.bound();
  Rational bb = b;
  bb.canonicalize();
  const long num = bb.get_num().get_si(), den = bb.get_den().get_si();
  std::vector<BigFloat> cosines;
  for (long u = 0; u < den; ++u) cosines.push_back(BigComplex::unit_root(u * num, den, prec).re() * BigFloat(2L, prec));
  BigFloat s(s_prime, prec);
  BigFloat total(prec);
  double growth = 0;
  for (long r = 1; r <= R; ++r) {
    const Rational& c = coeffs.c(r);
    if (c == 0) continue;
    double cr = std::abs(c.get_d());
    growth = std::max(growth, cr / std::pow(static_cast<double>(r), k));
    total += cosines[static_cast<std::size_t>(r % den)] * BigFloat(c, prec) *
             inverse_power(static_cast<unsigned long>(r), s);
  }
  PairingSeries out;
  out.value = BigComplex(total);
  double excess = s_prime.get_d() - k - 1;
  out.tail_bound = 2 * growth * std::pow(static_cast<double>(R), -excess) / excess;
  return out;
}

PairingSeries pairing_series(const MockEigenform& f, const Rational& b, const Rational& s_prime, long R, long prec) {
  return pairing_series(AsaiCoefficients(f, R), f.k, b, s_prime, prec);
}

RationalityReport rationality_ratio(const MockEigenform& f, const DirichletCharacter& chi, int n, int m,
                                    const GammaCoefficientTable& table, const BigComplex& omega_f, long R, long prec,
                                    double tol) {
  if (n != f.k - 2) throw std::invalid_argument("rationality_ratio: n must equal k - 2");
  if (m < 0 || m >= n || m % 2 != 0) throw std::invalid_argument("rationality_ratio: m must be even with m < n");
  if (!chi.is_even()) throw std::invalid_argument("rationality_ratio: chi must be even");
  if (conductor(chi) != chi.modulus()) throw std::invalid_argument("rationality_ratio: chi must be primitive");
  if (omega_f.abs().is_zero()) throw std::invalid_argument("rationality_ratio: Omega(f) must be nonzero");
  const long q = chi.modulus();
  const long N = f.N;
  const long D = f.field.D();
  const int kL = 2 * n - 2 * m + 2;
  const long sp = 2 * n - m + 2;
  if (std::gcd(q, N * D) != 1) throw std::invalid_argument("rationality_ratio: conductor must be prime to N D");

  RationalityReport rep;
  rep.G_prime_inf = G_prime_infty(n, m, 0, table, prec);
  BigComplex G_inf = rep.G_prime_inf * gamma(BigFloat(static_cast<long>(kL), prec));
  rep.omega_inf = omega_infty(n, m, D, G_inf);

  AsaiCoefficients coeffs(f, R);
  DirichletCharacter chi_bar = chi.conj();
  DirichletCharacter chi_bar2 = chi_bar * chi_bar;

  // left side, with L_N summed numerically
  BigComplex twisted(prec);
  BigFloat s(sp, prec);
  for (long r = 1; r <= R; ++r) {
    long e = chi_bar.exponent(r);
    if (e < 0 || coeffs.c(r) == 0) continue;
    twisted += BigComplex::unit_root(e, chi_bar.order(), prec) *
               (BigFloat(coeffs.c(r), prec) * inverse_power(static_cast<unsigned long>(r), s));
  }
  auto LN = L_truncated(BigComplex(BigFloat(static_cast<long>(kL), prec)), chi_bar2.induce(q * N), 100000, prec);
  BigComplex G_chi = gauss_sum(chi).value.embed(prec);
  BigComplex G_chibar2 = gauss_sum(chi_bar2).value.embed(prec);
  rep.value = G_chi * LN.value * twisted / (G_chibar2 * rep.omega_inf * omega_f);

  // right side, exact normalized L-value and cosine sums over R
  NormalizedL Lo = normalized_L(chi, static_cast<unsigned>(kL));
  CyclotomicNumber LNo = Lo.value;
  for (auto [ell, e] : factorize(N)) {
    (void)e;
    long x = chi_bar2.exponent(ell);
    if (x < 0) continue;
    LNo = LNo * (CyclotomicNumber(1, Rational(1)) - chi_bar2.value(ell) * Rational(1, BigInt(ipow(ell, kL))));
  }
  BigFloat two_pi = BigFloat::pi(prec) * BigFloat(2L, prec);
  BigFloat pref = pow(sqrt(BigFloat(D, prec)), sp) / pow(two_pi, sp);
  std::vector<std::pair<long, Rational>> classes;  // (a, weight)
  if (q == 1) {
    classes.emplace_back(0, Rational(1, 2));
  } else {
    for (long a = 1; a < q; ++a)
      if (std::gcd(a, q) == 1 && a < q - a) classes.emplace_back(a, Rational(1));
  }
  BigComplex sum_a(prec);
  for (auto [a, w] : classes) {
    PairingSeries ps = pairing_series(coeffs, f.k, Rational(a, q), Rational(sp), prec);
    sum_a += chi.value(a).embed(prec) * ps.value * BigFloat(w, prec);
  }
  BigComplex scale = LNo.embed(prec) * pref * rep.G_prime_inf / omega_f;
  rep.rhs = scale * sum_a;

  BigComplex sum_r(prec);
  for (long r = 1; r <= R; ++r) {
    if (coeffs.c(r) == 0) continue;
    BigComplex inner(prec);
    for (auto [a, w] : classes)
      inner += chi.value(a).embed(prec) *
               (BigComplex::unit_root(r * a, q, prec).re() * BigFloat(2L, prec) * BigFloat(w, prec));
    sum_r += inner * (BigFloat(coeffs.c(r), prec) * inverse_power(static_cast<unsigned long>(r), s));
  }
  rep.rhs_swapped = scale * sum_r;

  double mag = std::max(1e-300, rep.value.abs().to_double());
  rep.gap = distance(rep.value, rep.rhs) / mag;
  rep.order_gap = distance(rep.rhs, rep.rhs_swapped) / mag;
  rep.algebraic_claim = rep.gap < tol && rep.order_gap < tol;
  return rep;
}

}  // namespace pasai
