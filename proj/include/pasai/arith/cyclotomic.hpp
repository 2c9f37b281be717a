#pragma once

#include <string>
#include <vector>

#include "pasai/arith/bigfloat.hpp"
#include "pasai/arith/polynomial.hpp"
#include "pasai/arith/rational.hpp"

namespace pasai {

/// Exact element of Q(zeta_m): a polynomial in zeta_m of degree < phi(m),
/// reduced modulo the m-th cyclotomic polynomial.
///
/// Arithmetic operators accept operands of different orders and lift both
/// to the lcm order. cyclotomic_mul is the strict variant.
class CyclotomicNumber {
 public:
  CyclotomicNumber();
  explicit CyclotomicNumber(long order);
  CyclotomicNumber(long order, const Rational& c);

  /// zeta_m^k.
  static CyclotomicNumber zeta(long order, long k = 1);
  /// Any coefficient vector in powers of zeta_m; folded by zeta^m = 1 and
  /// reduced.
  static CyclotomicNumber from_powers(long order, const std::vector<Rational>& c);
  /// sum_i counts[i] zeta_m^i with integer counts (length m). Reduction is
  /// done in integers, which keeps root-of-unity sums cheap.
  static CyclotomicNumber from_exponent_counts(long order, const std::vector<BigInt>& counts);
  static CyclotomicNumber from_exponent_counts(long order, const std::vector<long>& counts);

  long order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  Rational rational_part() const;

  CyclotomicNumber lift(long new_order) const;
  /// Galois automorphism zeta -> zeta^t, gcd(t, m) = 1.
  CyclotomicNumber galois(long t) const;
  CyclotomicNumber conj() const { return galois(-1); }
  CyclotomicNumber inverse() const;
  /// z^e for integer e (negative uses inverse()).
  CyclotomicNumber pow(long e) const;
  BigComplex embed(long prec) const;
  std::string to_string() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const Rational& c);

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

 private:
  friend CyclotomicNumber cyclotomic_mul(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a);

  long order_;
  std::vector<Rational> coeffs_;
};

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber operator-(const CyclotomicNumber& a);
CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber operator*(const CyclotomicNumber& a, const Rational& c);
CyclotomicNumber operator*(const Rational& c, const CyclotomicNumber& a);
CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);

/// Product of two elements of the same order; throws std::invalid_argument on
/// mismatch.
CyclotomicNumber cyclotomic_mul(const CyclotomicNumber& a, const CyclotomicNumber& b);
CyclotomicNumber cyclotomic_lift(const CyclotomicNumber& a, long new_order);
/// Product of all Galois conjugates, as Res(Phi_m, a).
Rational cyclotomic_norm(const CyclotomicNumber& a);
BigComplex embed_complex(const CyclotomicNumber& a, long prec);

/// Coefficients as a polynomial in zeta_m.
QPoly to_qpoly(const CyclotomicNumber& a);

}  // namespace pasai
