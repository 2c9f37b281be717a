#include "pasai/asai/eigenform.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <numeric>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"

namespace pasai {

namespace {

// c(l^e) for the prime ideal, with Nm^{k-1} supplied; bad primes use c^e.
Rational ideal_power(const MockEigenform& f, long l, int index, int e) {
  Rational c = f.eigenvalue(l, index);
  if (f.N % l == 0) return rational_pow(c, e);
  Rational np = rational_pow(Rational(f.field.ideal_norm(l)), f.k - 1);
  return hecke_power(c, np, e);
}

// c((l^e)) for a rational prime power.
Rational principal_prime_power(const MockEigenform& f, long l, int e) {
  switch (f.field.splitting(l)) {
    case Splitting::split:
      return ideal_power(f, l, 0, e) * ideal_power(f, l, 1, e);
    case Splitting::inert:
      return ideal_power(f, l, 0, e);
    case Splitting::ramified:
      return ideal_power(f, l, 0, 2 * e);
  }
  return 0;
}

}  // namespace

Rational MockEigenform::eigenvalue(long l, int index) const {
  if (l == p) return index == 0 ? p_satake[0] + p_satake[1] : p_satake[2] + p_satake[3];
  auto it = eigen.find({l, index});
  if (it != eigen.end()) return it->second;
  if (N % l == 0) return 0;
  throw std::out_of_range("missing eigenvalue at l = " + std::to_string(l));
}

void MockEigenform::validate() const {
  if (k < 2) throw std::invalid_argument("eigenform: k >= 2");
  if (N < 1) throw std::invalid_argument("eigenform: N >= 1");
  if (!is_prime(p) || p == 2 || N % p == 0 || field.splitting(p) != Splitting::split)
    throw std::invalid_argument("eigenform: p must be an odd split prime prime to N");
  Rational np = rational_pow(Rational(p), k - 1);
  if (p_satake[0] * p_satake[1] != np || p_satake[2] * p_satake[3] != np)
    throw std::invalid_argument("eigenform: alpha_1 alpha_2 must equal p^{k-1}");
}

MockEigenform MockEigenform::random(int k, long N, long D, long p, long bound, std::mt19937_64& rng) {
  MockEigenform f;
  f.k = k;
  f.N = N;
  f.field = QuadField(D);
  f.p = p;
  for (long l = 2; l <= bound; ++l) {
    if (!is_prime(l) || l == p) continue;
    int ideals = f.field.ideals_above(l);
    double nm = static_cast<double>(f.field.ideal_norm(l));
    long cap = static_cast<long>(2.0 * std::pow(nm, (k - 1) / 2.0));
    std::uniform_int_distribution<long> dist(-cap, cap);
    for (int i = 0; i < ideals; ++i) f.eigen[{l, i}] = N % l == 0 ? Rational(0) : Rational(dist(rng));
  }
  BigInt np = 1;
  for (int i = 1; i < k; ++i) np *= p;
  std::uniform_int_distribution<long> unit(1, 3 * p);
  std::bernoulli_distribution coin(0.5);
  for (int side = 0; side < 2; ++side) {
    long u;
    do u = unit(rng) * (coin(rng) ? 1 : -1);
    while (u % p == 0);
    Rational a(u), b(np, u);
    b.canonicalize();
    if (coin(rng)) std::swap(a, b);
    f.p_satake[static_cast<std::size_t>(2 * side)] = a;
    f.p_satake[static_cast<std::size_t>(2 * side + 1)] = b;
  }
  f.validate();
  return f;
}

MockEigenform parse_eigenform(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) tokens.push_back(t);
  }
  if (tokens.size() < 8) throw std::invalid_argument("eigenform file: truncated header");
  auto as_long = [](const std::string& t) {
    std::size_t used = 0;
    long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument("eigenform file: bad integer '" + t + "'");
    return v;
  };
  MockEigenform f;
  f.k = static_cast<int>(as_long(tokens[0]));
  f.N = as_long(tokens[1]);
  f.field = QuadField(as_long(tokens[2]));
  f.p = as_long(tokens[3]);
  for (std::size_t i = 0; i < 4; ++i) f.p_satake[i] = parse_rational(tokens[4 + i]);
  if ((tokens.size() - 8) % 3 != 0) throw std::invalid_argument("eigenform file: incomplete eigenvalue record");
  for (std::size_t i = 8; i < tokens.size(); i += 3) {
    long l = as_long(tokens[i]);
    long idx = as_long(tokens[i + 1]);
    if (!is_prime(l) || idx < 0 || idx >= f.field.ideals_above(l))
      throw std::invalid_argument("eigenform file: bad ideal (" + tokens[i] + ", " + tokens[i + 1] + ")");
    f.eigen[{l, static_cast<int>(idx)}] = parse_rational(tokens[i + 2]);
  }
  f.validate();
  return f;
}

MockEigenform load_eigenform(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open eigenform file " + path);
  return parse_eigenform(in);
}

void write_eigenform(std::ostream& out, const MockEigenform& f) {
  out << f.k << ' ' << f.N << ' ' << f.field.D() << ' ' << f.p << '\n';
  for (std::size_t i = 0; i < 4; ++i) out << (i ? " " : "") << f.p_satake[i].get_str();
  out << '\n';
  for (const auto& [tag, c] : f.eigen) out << tag.first << ' ' << tag.second << ' ' << c.get_str() << '\n';
}

Rational hecke_power(const Rational& c_l, const Rational& norm_pow, int e) {
  if (e < 0) throw std::invalid_argument("hecke_power: e >= 0");
  Rational prev = 1, cur = c_l;
  if (e == 0) return prev;
  for (int i = 1; i < e; ++i) {
    Rational next = c_l * cur - norm_pow * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Rational coeff_principal(const MockEigenform& f, long r) {
  if (r < 1) throw std::invalid_argument("coeff_principal: r >= 1");
  Rational out = 1;
  for (auto [l, e] : factorize(r)) out *= principal_prime_power(f, l, e);
  return out;
}

Rational asai_coeff(const MockEigenform& f, long r) {
  if (r < 1) throw std::invalid_argument("asai_coeff: r >= 1");
  Rational out = 0;
  for (long m = 1; m * m <= r; ++m) {
    if (r % (m * m) != 0 || std::gcd(m, f.N) != 1) continue;
    out += rational_pow(Rational(m), 2 * f.k - 2) * coeff_principal(f, r / (m * m));
  }
  return out;
}

AsaiCoefficients::AsaiCoefficients(const MockEigenform& f, long R) : R_(R) {
  if (R < 1) throw std::invalid_argument("AsaiCoefficients: R >= 1");
  ArithTables tables(R);
  c_.assign(static_cast<std::size_t>(R) + 1, 0);
  c_[1] = 1;
  for (long r = 2; r <= R; ++r) {
    long l = tables.smallest_factor(r);
    long q = 1;
    int e = 0;
    long rest = r;
    while (rest % l == 0) {
      rest /= l;
      q *= l;
      ++e;
    }
    c_[static_cast<std::size_t>(r)] = rest == 1 ? principal_prime_power(f, l, e) : c_[static_cast<std::size_t>(q)] * c_[static_cast<std::size_t>(rest)];
  }
  d_.assign(static_cast<std::size_t>(R) + 1, 0);
  for (long m = 1; m * m <= R; ++m) {
    if (std::gcd(m, f.N) != 1) continue;
    Rational w = rational_pow(Rational(m), 2 * f.k - 2);
    for (long t = 1; m * m * t <= R; ++t) d_[static_cast<std::size_t>(m * m * t)] += w * c_[static_cast<std::size_t>(t)];
  }
}

FormalDirichletSeries<Rational> AsaiCoefficients::d_series() const {
  FormalDirichletSeries<Rational> s(R_, Rational(0));
  for (long r = 1; r <= R_; ++r) s[r] = d_[static_cast<std::size_t>(r)];
  return s;
}

}  // namespace pasai
