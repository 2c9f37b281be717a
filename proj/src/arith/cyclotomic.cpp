#include "pasai/arith/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"

namespace pasai {

namespace {

struct SparsePhi {
  long deg;
  std::vector<std::pair<long, long>> lower;  // (index, coefficient) below the leading term
};

const SparsePhi& sparse_phi(long m) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<SparsePhi>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) {
    const auto& c = cyclotomic_polynomial(m);
    slot = std::make_unique<SparsePhi>(SparsePhi{static_cast<long>(c.size()) - 1, {}});
    for (long i = 0; i < slot->deg; ++i)
      if (c[static_cast<std::size_t>(i)] != 0) slot->lower.emplace_back(i, c[static_cast<std::size_t>(i)]);
  }
  return *slot;
}

// Fold v by x^m = 1 and reduce modulo Phi_m, in place; result has length phi(m).
void reduce_integer(std::vector<BigInt>& v, long m) {
  if (static_cast<long>(v.size()) > m) {
    for (std::size_t i = static_cast<std::size_t>(m); i < v.size(); ++i) v[i % static_cast<std::size_t>(m)] += v[i];
    v.resize(static_cast<std::size_t>(m));
  }
  const SparsePhi& phi = sparse_phi(m);
  for (long d = static_cast<long>(v.size()) - 1; d >= phi.deg; --d) {
    BigInt c = v[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    long shift = d - phi.deg;
    for (auto [i, a] : phi.lower) v[static_cast<std::size_t>(i + shift)] -= c * a;
    v[static_cast<std::size_t>(d)] = 0;
  }
  v.resize(static_cast<std::size_t>(phi.deg));
}

// Splits rational coefficients into integers over a common denominator.
BigInt clear_denominators(const std::vector<Rational>& c, std::vector<BigInt>& out) {
  BigInt den = 1;
  for (const auto& x : c) {
    if (x == 0) continue;
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  }
  out.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i].get_num() * (den / c[i].get_den());
  return den;
}

std::vector<Rational> over(const std::vector<BigInt>& v, const BigInt& den) {
  std::vector<Rational> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    r[i] = Rational(v[i], den);
    r[i].canonicalize();
  }
  return r;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber() : CyclotomicNumber(1) {}

CyclotomicNumber::CyclotomicNumber(long order) : order_(order) {
  if (order <= 0) throw std::invalid_argument("cyclotomic order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), Rational(0));
}

CyclotomicNumber::CyclotomicNumber(long order, const Rational& c) : CyclotomicNumber(order) { coeffs_[0] = c; }

CyclotomicNumber CyclotomicNumber::zeta(long order, long k) {
  std::vector<BigInt> counts(static_cast<std::size_t>(order), 0);
  counts[static_cast<std::size_t>(mod_floor(k, order))] = 1;
  return from_exponent_counts(order, counts);
}

CyclotomicNumber CyclotomicNumber::from_powers(long order, const std::vector<Rational>& c) {
  std::vector<BigInt> ints;
  BigInt den = clear_denominators(c, ints);
  if (ints.size() < static_cast<std::size_t>(euler_phi(order))) ints.resize(static_cast<std::size_t>(euler_phi(order)), 0);
  reduce_integer(ints, order);
  CyclotomicNumber r(order);
  r.coeffs_ = over(ints, den);
  return r;
}

CyclotomicNumber CyclotomicNumber::from_exponent_counts(long order, const std::vector<BigInt>& counts) {
  std::vector<BigInt> v = counts;
  if (v.size() < static_cast<std::size_t>(euler_phi(order))) v.resize(static_cast<std::size_t>(euler_phi(order)), 0);
  reduce_integer(v, order);
  CyclotomicNumber r(order);
  for (std::size_t i = 0; i < v.size(); ++i) r.coeffs_[i] = v[i];
  return r;
}

CyclotomicNumber CyclotomicNumber::from_exponent_counts(long order, const std::vector<long>& counts) {
  std::vector<BigInt> v(counts.begin(), counts.end());
  return from_exponent_counts(order, v);
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }

CyclotomicNumber CyclotomicNumber::lift(long new_order) const {
  if (new_order % order_ != 0) throw std::invalid_argument("lift: target order must be a multiple");
  if (new_order == order_) return *this;
  long step = new_order / order_;
  std::vector<Rational> raw(static_cast<std::size_t>((static_cast<long>(coeffs_.size()) - 1) * step + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * static_cast<std::size_t>(step)] = coeffs_[i];
  return from_powers(new_order, raw);
}

CyclotomicNumber CyclotomicNumber::galois(long t) const {
  if (std::gcd(mod_floor(t, order_), order_) != 1) throw std::invalid_argument("galois: t must be a unit");
  std::vector<Rational> raw(static_cast<std::size_t>(order_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[static_cast<std::size_t>(mod_floor(static_cast<long>(i) * t, order_))] += coeffs_[i];
  return from_powers(order_, raw);
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return CyclotomicNumber(order_, 1 / coeffs_[0]);
  auto eg = poly_ext_gcd(to_qpoly(*this), cyclotomic_qpoly(order_));
  if (eg.g.size() != 1) throw std::domain_error("inverse: not invertible");
  return from_powers(order_, eg.s);
}

CyclotomicNumber CyclotomicNumber::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicNumber result(order_, 1), base = *this;
  while (e > 0) {
    if (e & 1) result = cyclotomic_mul(result, base);
    e >>= 1;
    if (e) base = cyclotomic_mul(base, base);
  }
  return result;
}

BigComplex CyclotomicNumber::embed(long prec) const {
  BigComplex acc(prec);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    acc += BigComplex::unit_root(static_cast<long>(i), order_, prec) * BigFloat(coeffs_[i], prec);
  }
  return acc;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].get_str() << ")";
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) { return *this = *this - o; }
CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  long m = lcm_of(a.order_, b.order_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

namespace {

std::pair<CyclotomicNumber, CyclotomicNumber> common(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() == b.order()) return {a, b};
  long m = lcm_of(a.order(), b.order());
  return {a.lift(m), b.lift(m)};
}

}  // namespace

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() != b.order()) {
    auto [x, y] = common(a, b);
    return x + y;
  }
  CyclotomicNumber r(a);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
  CyclotomicNumber r(a);
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() != b.order()) {
    auto [x, y] = common(a, b);
    return cyclotomic_mul(x, y);
  }
  return cyclotomic_mul(a, b);
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& c) {
  CyclotomicNumber r(a);
  r *= c;
  return r;
}

CyclotomicNumber operator*(const Rational& c, const CyclotomicNumber& a) { return a * c; }

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  auto [x, y] = common(a, b);
  return cyclotomic_mul(x, y.inverse());
}

CyclotomicNumber cyclotomic_mul(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.order() != b.order()) throw std::invalid_argument("cyclotomic_mul: order mismatch");
  if (a.is_rational()) return b * a.rational_part();
  if (b.is_rational()) return a * b.rational_part();
  std::vector<BigInt> x, y;
  BigInt dx = clear_denominators(a.coeffs(), x);
  BigInt dy = clear_denominators(b.coeffs(), y);
  std::vector<BigInt> prod(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      mpz_addmul(prod[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  reduce_integer(prod, a.order());
  CyclotomicNumber r(a.order());
  r.coeffs_ = over(prod, BigInt(dx * dy));
  return r;
}

CyclotomicNumber cyclotomic_lift(const CyclotomicNumber& a, long new_order) { return a.lift(new_order); }

Rational cyclotomic_norm(const CyclotomicNumber& a) {
  QPoly p = to_qpoly(a);
  if (p.empty()) return 0;
  return resultant(cyclotomic_qpoly(a.order()), p);
}

BigComplex embed_complex(const CyclotomicNumber& a, long prec) {
  if (prec < 53) throw std::invalid_argument("embed_complex: precision below 53 bits");
  return a.embed(prec);
}

QPoly to_qpoly(const CyclotomicNumber& a) {
  QPoly p = a.coeffs();
  trim(p);
  return p;
}

}  // namespace pasai
