#include "pasai/arith/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pasai {

namespace {

long min_prec(const BigFloat& a, const BigFloat& b) { return std::min(a.precision(), b.precision()); }

void check_prec(long prec) {
  if (prec < MPFR_PREC_MIN || prec > 1 << 20) throw std::invalid_argument("unsupported precision");
}

}  // namespace

BigFloat::BigFloat(long prec) {
  check_prec(prec);
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double x, long prec) : BigFloat(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
BigFloat::BigFloat(long x, long prec) : BigFloat(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
BigFloat::BigFloat(const Rational& q, long prec) : BigFloat(prec) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }
BigFloat::BigFloat(const BigInt& z, long prec) : BigFloat(prec) { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return std::string(buf.data());
}

BigFloat BigFloat::pi(long prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) { return *this = *this + o; }
BigFloat& BigFloat::operator-=(const BigFloat& o) { return *this = *this - o; }
BigFloat& BigFloat::operator*=(const BigFloat& o) { return *this = *this * o; }
BigFloat& BigFloat::operator/=(const BigFloat& o) { return *this = *this / o; }

#define PASAI_BINOP(op, fn)                                  \
  BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
    BigFloat r(min_prec(a, b));                              \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                \
    return r;                                                \
  }
PASAI_BINOP(+, mpfr_add)
PASAI_BINOP(-, mpfr_sub)
PASAI_BINOP(*, mpfr_mul)
PASAI_BINOP(/, mpfr_div)
#undef PASAI_BINOP

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.raw(), b.raw()) != 0; }
bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.raw(), b.raw()) != 0; }
bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.raw(), b.raw()) != 0; }

#define PASAI_UNARY(name, fn)                 \
  BigFloat name(const BigFloat& a) {          \
    BigFloat r(a.precision());                \
    fn(r.raw(), a.raw(), MPFR_RNDN);          \
    return r;                                 \
  }
PASAI_UNARY(abs, mpfr_abs)
PASAI_UNARY(sqrt, mpfr_sqrt)
PASAI_UNARY(exp, mpfr_exp)
PASAI_UNARY(log, mpfr_log)
PASAI_UNARY(sin, mpfr_sin)
PASAI_UNARY(cos, mpfr_cos)
PASAI_UNARY(gamma, mpfr_gamma)
#undef PASAI_UNARY

BigFloat pow(const BigFloat& a, const BigFloat& b) {
  BigFloat r(min_prec(a, b));
  mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat pow(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat inverse_power(unsigned long n, const BigFloat& s) {
  BigFloat r(s.precision());
  if (mpfr_integer_p(s.raw()) && mpfr_fits_slong_p(s.raw(), MPFR_RNDN)) {
    long e = mpfr_get_si(s.raw(), MPFR_RNDN);
    mpfr_set_ui(r.raw(), n, MPFR_RNDN);
    mpfr_pow_si(r.raw(), r.raw(), -e, MPFR_RNDN);
    return r;
  }
  BigFloat base(static_cast<long>(n), s.precision());
  mpfr_pow(r.raw(), base.raw(), s.raw(), MPFR_RNDN);
  mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
  return r;
}

BigComplex::BigComplex(long prec) : re_(prec), im_(prec) {}
BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
BigComplex::BigComplex(const BigFloat& re) : re_(re), im_(re.precision()) {}

long BigComplex::precision() const { return std::min(re_.precision(), im_.precision()); }

BigComplex BigComplex::unit_root(long num, long den, long prec) {
  if (den <= 0) throw std::invalid_argument("unit_root: denominator must be positive");
  num = mod_floor(num, den);
  BigFloat angle = BigFloat::pi(prec + 16) * BigFloat(2 * num, prec + 16) / BigFloat(den, prec + 16);
  BigFloat c(prec), s(prec);
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  return {c, s};
}

BigComplex BigComplex::polar_unit(const BigFloat& angle) {
  BigFloat c(angle.precision()), s(angle.precision());
  mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  return {c, s};
}

BigComplex BigComplex::conj() const { return {re_, -im_}; }
BigFloat BigComplex::norm() const { return re_ * re_ + im_ * im_; }
BigFloat BigComplex::abs() const {
  BigFloat r(precision());
  mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) { return *this = *this + o; }
BigComplex& BigComplex::operator-=(const BigComplex& o) { return *this = *this - o; }
BigComplex& BigComplex::operator*=(const BigComplex& o) { return *this = *this * o; }
BigComplex& BigComplex::operator*=(const BigFloat& o) { return *this = *this * o; }
BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this = *this / o; }

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re() + b.re(), a.im() + b.im()}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re() - b.re(), a.im() - b.im()}; }
BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re()};
}
BigComplex operator*(const BigComplex& a, const BigFloat& b) { return {a.re() * b, a.im() * b}; }
BigComplex operator*(const BigFloat& a, const BigComplex& b) { return b * a; }
BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat n = b.norm();
  if (n.is_zero()) throw std::domain_error("complex division by zero");
  BigComplex num = a * b.conj();
  return {num.re() / n, num.im() / n};
}
BigComplex operator-(const BigComplex& a) { return {-a.re(), -a.im()}; }

BigComplex pow(const BigComplex& z, long e) {
  if (e < 0) return BigComplex(BigFloat(1L, z.precision())) / pow(z, -e);
  BigComplex result(BigFloat(1L, z.precision()));
  BigComplex base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

BigComplex exp(const BigComplex& z) { return exp(z.re()) * BigComplex::polar_unit(z.im()); }

double distance(const BigComplex& a, const BigComplex& b) { return (a - b).abs().to_double(); }

}  // namespace pasai
