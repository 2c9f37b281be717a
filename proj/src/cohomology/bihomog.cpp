#include "pasai/cohomology/bihomog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"

namespace pasai {

QuadCoeff::QuadCoeff(Rational x, Rational y, long D) : x_(std::move(x)), y_(std::move(y)), D_(D) {
  x_.canonicalize();
  y_.canonicalize();
}

QuadCoeff QuadCoeff::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("QuadCoeff: inverse of zero");
  return {x_ / n, -y_ / n, D_};
}

long QuadCoeff::valuation(long p) const {
  long v = std::numeric_limits<long>::max();
  if (x_ != 0) v = std::min(v, pasai::valuation(x_, static_cast<unsigned long>(p)));
  if (y_ != 0) v = std::min(v, pasai::valuation(y_, static_cast<unsigned long>(p)));
  return v;
}

std::string QuadCoeff::to_string() const {
  return pasai::to_string(x_) + " + " + pasai::to_string(y_) + "*sqrt(-" + std::to_string(D_) + ")";
}

QuadCoeff operator+(const QuadCoeff& a, const QuadCoeff& b) { return {a.x_ + b.x_, a.y_ + b.y_, a.D_}; }
QuadCoeff operator-(const QuadCoeff& a, const QuadCoeff& b) { return {a.x_ - b.x_, a.y_ - b.y_, a.D_}; }
QuadCoeff operator-(const QuadCoeff& a) { return {-a.x_, -a.y_, a.D_}; }
QuadCoeff operator*(const QuadCoeff& a, const QuadCoeff& b) {
  return {a.x_ * b.x_ - Rational(a.D_) * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, a.D_};
}
QuadCoeff operator*(const QuadCoeff& a, const Rational& c) { return {a.x_ * c, a.y_ * c, a.D_}; }

QuadMatrix2 QuadMatrix2::operator*(const QuadMatrix2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

QuadMatrix2 QuadMatrix2::identity(long D) {
  QuadCoeff one = QuadCoeff::rational(1, D), zero = QuadCoeff::rational(0, D);
  return {one, zero, zero, one};
}

QuadMatrix2 QuadMatrix2::translation(const QuadCoeff& beta) {
  QuadMatrix2 g = identity(beta.D());
  g.b = beta;
  return g;
}

BiHomogPoly::BiHomogPoly(int n, long D) : n_(n), D_(D) {
  if (n < 0) throw std::invalid_argument("BiHomogPoly: negative degree");
  c_.assign(static_cast<std::size_t>((n + 1) * (n + 1)), QuadCoeff::rational(0, D));
}

BiHomogPoly BiHomogPoly::random(int n, long D, long bound, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> U(-bound, bound);
  BiHomogPoly P(n, D);
  for (auto& c : P.c_) c = QuadCoeff(U(rng), U(rng), D);
  return P;
}

long BiHomogPoly::min_valuation(long p) const {
  long v = std::numeric_limits<long>::max();
  for (const auto& c : c_) v = std::min(v, c.valuation(p));
  return v;
}

long HomogPoly::min_valuation(long p) const {
  long v = std::numeric_limits<long>::max();
  for (const auto& c : coeffs) v = std::min(v, c.valuation(p));
  return v;
}

BiHomogPoly operator+(const BiHomogPoly& a, const BiHomogPoly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("BiHomogPoly: degree mismatch");
  BiHomogPoly r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

BiHomogPoly operator*(const BiHomogPoly& a, const QuadCoeff& c) {
  BiHomogPoly r = a;
  for (auto& x : r.c_) x = x * c;
  return r;
}

namespace {

using Lin = std::vector<QuadCoeff>;  // coefficient of X^{d-t} Y^t

Lin lin_mul(const Lin& a, const Lin& b, long D) {
  Lin r(a.size() + b.size() - 1, QuadCoeff::rational(0, D));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// (u X + v Y)^e as coefficients of X^{e-t} Y^t.
Lin lin_pow(const QuadCoeff& u, const QuadCoeff& v, int e, long D) {
  Lin r{QuadCoeff::rational(1, D)};
  for (int i = 0; i < e; ++i) r = lin_mul(r, Lin{u, v}, D);
  return r;
}

// Coefficients of (dX - bY)^{n-i} (-cX + aY)^i for i = 0..n.
std::vector<Lin> substitution_table(const QuadMatrix2& g, int n, long D) {
  std::vector<Lin> out;
  for (int i = 0; i <= n; ++i)
    out.push_back(lin_mul(lin_pow(g.d, -g.b, n - i, D), lin_pow(-g.c, g.a, i, D), D));
  return out;
}

void check_det(const QuadMatrix2& g) {
  if (g.det() != QuadCoeff::rational(1, g.a.D())) throw std::invalid_argument("sl2_act: determinant must be 1");
}

}  // namespace

BiHomogPoly sl2_act(const QuadMatrix2& g, const BiHomogPoly& P) {
  check_det(g);
  const int n = P.degree();
  const long D = P.D();
  QuadMatrix2 gbar{g.a.conj(), g.b.conj(), g.c.conj(), g.d.conj()};
  auto L = substitution_table(g, n, D);
  auto R = substitution_table(gbar, n, D);
  BiHomogPoly out(n, D);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const QuadCoeff& c = P.at(i, j);
      if (c.is_zero()) continue;
      for (int t = 0; t <= n; ++t) {
        QuadCoeff ct = c * L[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        if (ct.is_zero()) continue;
        for (int u = 0; u <= n; ++u) out.at(t, u) += ct * R[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
      }
    }
  return out;
}

HomogPoly sl2_act(const QuadMatrix2& g, const HomogPoly& Q) {
  check_det(g);
  const int d = Q.degree;
  const long D = g.a.D();
  auto T = substitution_table(g, d, D);
  HomogPoly out{d, std::vector<QuadCoeff>(static_cast<std::size_t>(d + 1), QuadCoeff::rational(0, D))};
  // coeffs[l] multiplies X^l Y^{d-l}, which is index i = d - l in the table.
  for (int l = 0; l <= d; ++l) {
    const QuadCoeff& c = Q.coeffs[static_cast<std::size_t>(l)];
    if (c.is_zero()) continue;
    const Lin& row = T[static_cast<std::size_t>(d - l)];
    for (int t = 0; t <= d; ++t) out.coeffs[static_cast<std::size_t>(d - t)] += c * row[static_cast<std::size_t>(t)];
  }
  return out;
}

BiHomogPoly nabla(const BiHomogPoly& P) {
  const int n = P.degree();
  if (n == 0) throw std::invalid_argument("nabla: degree must be positive");
  BiHomogPoly out(n - 1, P.D());
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const QuadCoeff& c = P.at(i, j);
      if (c.is_zero()) continue;
      if (i < n && j > 0) out.at(i, j - 1) += c * Rational((n - i) * j);
      if (i > 0 && j < n) out.at(i - 1, j) += c * Rational(-(i * (n - j)));
    }
  return out;
}

HomogPoly clebsch_project(const BiHomogPoly& P, int m) {
  if (m < 0 || m > P.degree()) throw std::out_of_range("clebsch_project: m out of range");
  BiHomogPoly Q = P;
  for (int t = 0; t < m; ++t) Q = nabla(Q);
  BigInt mf = factorial(static_cast<unsigned>(m));
  Rational scale(1, mf * mf);
  const int n = Q.degree();
  HomogPoly out{2 * n, std::vector<QuadCoeff>(static_cast<std::size_t>(2 * n + 1), QuadCoeff::rational(0, P.D()))};
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) out.coeffs[static_cast<std::size_t>(2 * n - i - j)] += Q.at(i, j) * scale;
  return out;
}

DenominatorReport denominator_lemma_check(int n, int m, long p, int j, long trials, long D, std::uint64_t seed) {
  if (p <= n || !is_prime(p) || (2 * D) % p == 0)
    throw std::invalid_argument("denominator_lemma_check: need a prime p > n prime to 2D");
  if (m < 0 || m > n) throw std::out_of_range("denominator_lemma_check: m out of range");
  DenominatorReport rep;
  rep.n = n;
  rep.m = m;
  rep.p = p;
  rep.j = j;
  rep.trials = trials;
  rep.pre_bound = -2L * n * j;
  rep.post_bound = -static_cast<long>(j) * (2 * n - m);
  std::mt19937_64 rng(seed);
  const long pj = ipow(p, j);
  std::uniform_int_distribution<long> A(1, std::max(1L, pj));
  for (long t = 0; t < trials; ++t) {
    long a;
    do a = 2 * A(rng);
    while (std::gcd(a, pj) != 1);
    QuadCoeff beta(0, Rational(a, 2 * pj), D);
    BiHomogPoly P = BiHomogPoly::random(n, D, 50, rng);
    BiHomogPoly moved = sl2_act(QuadMatrix2::translation(-beta), P);
    rep.pre_min = std::min(rep.pre_min, moved.min_valuation(p));
    rep.post_min = std::min(rep.post_min, clebsch_project(moved, m).min_valuation(p));
  }
  rep.pass = rep.pre_min >= rep.pre_bound && rep.post_min >= rep.post_bound;
  return rep;
}

namespace {

// Exponents of X, Y, Xbar, Ybar, A, B, U, V.
using Mono = std::array<int, 8>;
using MPoly = std::map<Mono, Rational>;

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m;
      for (int i = 0; i < 8; ++i) m[static_cast<std::size_t>(i)] = ma[static_cast<std::size_t>(i)] + mb[static_cast<std::size_t>(i)];
      r[m] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

MPoly binomial_form(int v1, int v2, int v3, int v4, const Rational& c1, const Rational& c2) {
  // c1 * var(v1) var(v2) + c2 * var(v3) var(v4)
  Mono m1{}, m2{};
  m1[static_cast<std::size_t>(v1)]++;
  m1[static_cast<std::size_t>(v2)]++;
  m2[static_cast<std::size_t>(v3)]++;
  m2[static_cast<std::size_t>(v4)]++;
  MPoly r;
  r[m1] += c1;
  r[m2] += c2;
  return r;
}

MPoly mpoly_pow(const MPoly& a, int e) {
  MPoly r{{Mono{}, Rational(1)}};
  for (int i = 0; i < e; ++i) r = mpoly_mul(r, a);
  return r;
}

enum { X, Y, XB, YB, VA, VB, VU, VV };

}  // namespace

PsiIdentityReport psi_identity_check(int n) {
  if (n < 0) throw std::invalid_argument("psi_identity_check: negative n");
  PsiIdentityReport rep;
  rep.n = n;
  rep.components = 2 * n + 3;
  MPoly lhs = mpoly_mul(mpoly_mul(mpoly_pow(binomial_form(X, VV, Y, VU, 1, -1), n),
                                  mpoly_pow(binomial_form(XB, VU, YB, VV, 1, 1), n)),
                        mpoly_pow(binomial_form(VA, VV, VB, VU, 1, -1), 2));
  rep.monomials = static_cast<long>(lhs.size());
  auto c = [&](int alpha) {
    MPoly r;
    if (alpha < 0 || alpha > 2 * n) return r;
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        if (n != alpha + j - k) continue;
        Mono m{};
        m[X] = n - k;
        m[Y] = k;
        m[XB] = n - j;
        m[YB] = j;
        Rational v(((k % 2) ? -1 : 1) * binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
                   binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
        r[m] += v;
      }
    return r;
  };
  auto times = [](const MPoly& a, int var1, int var2, const Rational& s) {
    MPoly r;
    for (const auto& [m, v] : a) {
      Mono mm = m;
      mm[static_cast<std::size_t>(var1)]++;
      mm[static_cast<std::size_t>(var2)]++;
      r[mm] += v * s;
    }
    return r;
  };
  rep.matches = true;
  rep.degrees_ok = true;
  for (int alpha = 0; alpha <= 2 * n + 2; ++alpha) {
    Rational denom(binomial(static_cast<unsigned>(2 * n + 2), static_cast<unsigned>(alpha)));
    if (alpha % 2) denom = -denom;
    MPoly extracted;
    for (const auto& [m, v] : lhs) {
      if (m[VU] != alpha || m[VV] != 2 * n + 2 - alpha) continue;
      Mono mm = m;
      mm[VU] = mm[VV] = 0;
      extracted[mm] += v / denom;
    }
    MPoly closed;
    for (const auto& part : {times(c(alpha), VA, VA, 1), times(c(alpha - 1), VA, VB, -2), times(c(alpha - 2), VB, VB, 1)})
      for (const auto& [m, v] : part) closed[m] += v / denom;
    for (auto it = closed.begin(); it != closed.end();) it = it->second == 0 ? closed.erase(it) : std::next(it);
    if (extracted != closed) rep.matches = false;
    for (const auto& [m, v] : extracted)
      if (m[X] + m[Y] != n || m[XB] + m[YB] != n || m[VA] + m[VB] != 2) rep.degrees_ok = false;
  }
  return rep;
}

}  // namespace pasai
