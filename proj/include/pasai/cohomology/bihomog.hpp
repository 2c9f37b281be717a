#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "pasai/arith/rational.hpp"

namespace pasai {

/// x + y sqrt(-D).
class QuadCoeff {
 public:
  QuadCoeff() = default;
  QuadCoeff(Rational x, Rational y, long D);
  static QuadCoeff rational(const Rational& x, long D) { return {x, 0, D}; }
  static QuadCoeff sqrt_minus_D(long D) { return {0, 1, D}; }

  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  long D() const { return D_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }
  QuadCoeff conj() const { return {x_, -y_, D_}; }
  Rational norm() const { return x_ * x_ + Rational(D_) * y_ * y_; }
  QuadCoeff inverse() const;
  /// min(v_p(x), v_p(y)); correct for p prime to 2D. Zero gives LONG_MAX.
  long valuation(long p) const;
  std::string to_string() const;

  friend QuadCoeff operator+(const QuadCoeff& a, const QuadCoeff& b);
  friend QuadCoeff operator-(const QuadCoeff& a, const QuadCoeff& b);
  friend QuadCoeff operator-(const QuadCoeff& a);
  friend QuadCoeff operator*(const QuadCoeff& a, const QuadCoeff& b);
  friend QuadCoeff operator*(const QuadCoeff& a, const Rational& c);
  friend QuadCoeff operator/(const QuadCoeff& a, const QuadCoeff& b) { return a * b.inverse(); }
  QuadCoeff& operator+=(const QuadCoeff& o) { return *this = *this + o; }
  QuadCoeff& operator*=(const QuadCoeff& o) { return *this = *this * o; }
  friend bool operator==(const QuadCoeff& a, const QuadCoeff& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  friend bool operator!=(const QuadCoeff& a, const QuadCoeff& b) { return !(a == b); }

 private:
  Rational x_ = 0, y_ = 0;
  long D_ = 3;
};

struct QuadMatrix2 {
  QuadCoeff a, b, c, d;
  QuadCoeff det() const { return a * d - b * c; }
  QuadMatrix2 operator*(const QuadMatrix2& o) const;
  static QuadMatrix2 identity(long D);
  /// [[1, beta], [0, 1]].
  static QuadMatrix2 translation(const QuadCoeff& beta);
};

/// sum coeff(i, j) X^{n-i} Y^i Xbar^{n-j} Ybar^j.
class BiHomogPoly {
 public:
  BiHomogPoly(int n, long D);

  int degree() const { return n_; }
  long D() const { return D_; }
  QuadCoeff& at(int i, int j) { return c_[idx(i, j)]; }
  const QuadCoeff& at(int i, int j) const { return c_[idx(i, j)]; }
  /// Random coefficients x + y sqrt(-D) with x, y integers in [-bound, bound].
  static BiHomogPoly random(int n, long D, long bound, std::mt19937_64& rng);
  long min_valuation(long p) const;

  friend BiHomogPoly operator+(const BiHomogPoly& a, const BiHomogPoly& b);
  friend BiHomogPoly operator*(const BiHomogPoly& a, const QuadCoeff& c);
  friend bool operator==(const BiHomogPoly& a, const BiHomogPoly& b) { return a.n_ == b.n_ && a.c_ == b.c_; }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * (n_ + 1) + j); }
  int n_;
  long D_;
  std::vector<QuadCoeff> c_;
};

/// sum coeff[l] X^l Y^{d-l}.
struct HomogPoly {
  int degree = 0;
  std::vector<QuadCoeff> coeffs;
  long min_valuation(long p) const;
  friend bool operator==(const HomogPoly& a, const HomogPoly& b) { return a.degree == b.degree && a.coeffs == b.coeffs; }
};

/// P(d X - b Y, -c X + a Y, dbar Xbar - bbar Ybar, -cbar Xbar + abar Ybar).
/// Throws std::invalid_argument unless det g = 1.
BiHomogPoly sl2_act(const QuadMatrix2& g, const BiHomogPoly& P);
/// Q(d X - b Y, -c X + a Y).
HomogPoly sl2_act(const QuadMatrix2& g, const HomogPoly& Q);

/// d^2/dX dYbar - d^2/dXbar dY. Throws for n = 0.
BiHomogPoly nabla(const BiHomogPoly& P);

/// (1/(m!)^2) nabla^m P restricted to Xbar = X, Ybar = Y.
HomogPoly clebsch_project(const BiHomogPoly& P, int m);

struct DenominatorReport {
  int n = 0, m = 0, j = 0;
  long p = 0;
  long trials = 0;
  long pre_bound = 0;   // -2nj
  long post_bound = 0;  // -j(2n - m)
  long pre_min = std::numeric_limits<long>::max();
  long post_min = std::numeric_limits<long>::max();
  bool pass = false;
};

/// Random p-integral P, apply gamma_beta^{-1} with beta = a sqrt(-D)/(2 p^j) for a random
/// even a prime to p, project, and compare the p-valuations to the two bounds.
/// Throws std::invalid_argument unless p > n and p does not divide 2D.
DenominatorReport denominator_lemma_check(int n, int m, long p, int j, long trials, long D = 3,
                                          std::uint64_t seed = 1);

struct PsiIdentityReport {
  int n = 0;
  int components = 0;
  bool matches = false;      // extracted psi_alpha equal the c_alpha closed form
  bool degrees_ok = false;   // (n, n, 2) in (X,Y), (Xbar,Ybar), (A,B)
  long monomials = 0;
};

PsiIdentityReport psi_identity_check(int n);

}  // namespace pasai
