#pragma once

#include <mpfr.h>

#include <string>

#include "pasai/arith/rational.hpp"

namespace pasai {

/// RAII wrapper over an MPFR float. Every value carries its own precision;
/// binary operations round to the smaller precision of the two operands.
class BigFloat {
 public:
  static constexpr long kDefaultPrecision = 128;

  explicit BigFloat(long prec = kDefaultPrecision);
  BigFloat(double x, long prec);
  BigFloat(long x, long prec);
  BigFloat(const Rational& q, long prec);
  BigFloat(const BigInt& z, long prec);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  long precision() const { return static_cast<long>(mpfr_get_prec(v_)); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string to_string(int digits = 30) const;
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  static BigFloat pi(long prec);

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);

 private:
  mpfr_t v_;
  bool live_ = true;
};

BigFloat operator+(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a, const BigFloat& b);
BigFloat operator*(const BigFloat& a, const BigFloat& b);
BigFloat operator/(const BigFloat& a, const BigFloat& b);
BigFloat operator-(const BigFloat& a);
bool operator<(const BigFloat& a, const BigFloat& b);
bool operator>(const BigFloat& a, const BigFloat& b);
bool operator<=(const BigFloat& a, const BigFloat& b);

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat pow(const BigFloat& a, const BigFloat& b);
BigFloat pow(const BigFloat& a, long e);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat gamma(const BigFloat& a);

/// n^{-s} for a positive integer n and real s.
BigFloat inverse_power(unsigned long n, const BigFloat& s);

/// Complex number with MPFR components. Precision is the minimum of the
/// components and propagates as the minimum over operands.
class BigComplex {
 public:
  explicit BigComplex(long prec = BigFloat::kDefaultPrecision);
  BigComplex(BigFloat re, BigFloat im);
  explicit BigComplex(const BigFloat& re);

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  long precision() const;

  /// e^{2 pi i num/den}.
  static BigComplex unit_root(long num, long den, long prec);
  static BigComplex polar_unit(const BigFloat& angle);

  BigComplex conj() const;
  BigFloat norm() const;  // |z|^2
  BigFloat abs() const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& o);
  BigComplex& operator/=(const BigComplex& o);

 private:
  BigFloat re_;
  BigFloat im_;
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigFloat& b);
BigComplex operator*(const BigFloat& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);

/// z^e for an integer exponent.
BigComplex pow(const BigComplex& z, long e);
/// e^z.
BigComplex exp(const BigComplex& z);

/// |a - b| as a double, convenient for tolerance checks.
double distance(const BigComplex& a, const BigComplex& b);

}  // namespace pasai
