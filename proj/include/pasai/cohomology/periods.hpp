#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pasai/arith/bigfloat.hpp"
#include "pasai/asai/eigenform.hpp"
#include "pasai/characters/dirichlet.hpp"

namespace pasai {

/// Integers a(m, l, alpha), b(m, l, alpha), supplied from outside.
struct GammaCoefficientTable {
  using Key = std::tuple<long, long, long>;
  std::map<Key, BigInt> a;
  std::map<Key, BigInt> b;

  /// Whitespace separated records "m l alpha a b"; '#' starts a comment.
  static GammaCoefficientTable parse(std::istream& in);
  static GammaCoefficientTable load(const std::string& path);
};

struct GammaProduct {
  long l = 0;
  long alpha = 0;
  BigInt coefficient;
  Rational weight{1};       // 1/2 on alpha = n + 1
  Rational arg1, arg2;      // Gamma(arg1) Gamma(arg2)
};

struct GammaFactor {
  BigComplex value;
  std::vector<GammaProduct> products;
  bool reconstructed = false;  // set for the b-table sum
};

/// sum_l i^{l+1} sum_{alpha = n+1+m (2)} a(m,l,alpha) Gamma((n+1-m+alpha+s)/2) Gamma((3n+3-m-alpha+s)/2),
/// alpha = n+1 halved. Absent entries count as 0 unless strict, which throws std::out_of_range.
GammaFactor gamma_factor_I1(int n, int m, const Rational& s, const GammaCoefficientTable& table, long prec,
                            bool strict = false);
/// Same shape with b(m,l,alpha) and weight i^l.
GammaFactor gamma_factor_I2(int n, int m, const Rational& s, const GammaCoefficientTable& table, long prec,
                            bool strict = false);
/// G'_inf(s) = (-1)^{n+1} (I1 - 2 I2) / 2.
BigComplex G_prime_infty(int n, int m, const Rational& s, const GammaCoefficientTable& table, long prec);

/// (2 pi)^{4n-3m+4} Gamma(2n-2m+2) / (G_inf(0) sqrt(D)^{2n-m+2}). Throws std::domain_error
/// when G_inf(0) vanishes.
BigComplex omega_infty(int n, int m, long D, const BigComplex& G_inf_0);

struct PairingSeries {
  BigComplex value;
  double tail_bound = 0;
};

/// sum_{r <= R} (e(rb) + e(-rb)) c(r) r^{-s'}. Throws std::invalid_argument unless s' > k + 1.
PairingSeries pairing_series(const MockEigenform& f, const Rational& b, const Rational& s_prime, long R, long prec);
PairingSeries pairing_series(const AsaiCoefficients& coeffs, int k, const Rational& b, const Rational& s_prime,
                             long prec);

struct RationalityReport {
  BigComplex value;  // G(chi) G(2n-m+2, conj chi, f) / (G(conj chi^2) Omega(f) Omega_inf)
  BigComplex rhs;    // L_N^o sum_{a in R} chi(a) <T_beta^* delta, E^beta(0)> / Omega(f)
  BigComplex rhs_swapped;  // same double sum with the r and a loops exchanged
  BigComplex G_prime_inf;
  BigComplex omega_inf;
  double gap = 0;
  double order_gap = 0;
  bool algebraic_claim = false;
  bool reconstructed_I2 = true;
};

/// Both sides of the twisted integral expression at s = 0 for an even primitive chi mod p^j
/// (or the trivial character mod 1), n = k - 2 and even m < n.
RationalityReport rationality_ratio(const MockEigenform& f, const DirichletCharacter& chi, int n, int m,
                                    const GammaCoefficientTable& table, const BigComplex& omega_f, long R, long prec,
                                    double tol = 1e-8);

}  // namespace pasai
