#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <map>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "pasai/arith/rational.hpp"
#include "pasai/asai/dirichlet_series.hpp"
#include "pasai/asai/quad_field.hpp"

namespace pasai {

/// Prime ideal above l; index 0 or 1 distinguishes the two primes of a split l.
using IdealTag = std::pair<long, int>;

/// Eigen-data standing in for a Bianchi eigenform: Hecke eigenvalues c(l) at
/// prime ideals and Satake parameters at the split prime p.
struct MockEigenform {
  int k = 2;
  long N = 1;
  QuadField field{3};
  long p = 7;
  std::map<IdealTag, Rational> eigen;
  /// alpha_1(P), alpha_2(P), alpha_1(Pbar), alpha_2(Pbar).
  std::array<Rational, 4> p_satake{1, 1, 1, 1};

  /// c(l) at a prime ideal. Primes above p read the Satake sums; primes
  /// dividing N default to 0. Throws std::out_of_range if data is missing.
  Rational eigenvalue(long l, int index) const;
  /// Checks alpha_1 alpha_2 = Nm^{k-1} at p and that p splits and is prime
  /// to N; throws std::invalid_argument on failure.
  void validate() const;

  /// Random integer eigenvalues with |c| <= 2 Nm^{(k-1)/2} at primes up to
  /// bound, and ordinary rational Satake data at p (the unit root may sit in
  /// either slot).
  static MockEigenform random(int k, long N, long D, long p, long bound, std::mt19937_64& rng);
};

/// Text format: "k N D p", then the four Satake values at p, then one
/// "l index c" line per prime ideal. '#' starts a comment.
MockEigenform parse_eigenform(std::istream& in);
MockEigenform load_eigenform(const std::string& path);
void write_eigenform(std::ostream& out, const MockEigenform& f);

/// c(l^e) from c(l^{e+1}) = c(l) c(l^e) - Nm^{k-1} c(l^{e-1}).
Rational hecke_power(const Rational& c_l, const Rational& norm_pow, int e);

/// Memoized c(r) and d(r) for 1 <= r <= R.
class AsaiCoefficients {
 public:
  AsaiCoefficients(const MockEigenform& f, long R);

  long bound() const { return R_; }
  const Rational& c(long r) const { return c_.at(static_cast<std::size_t>(r)); }
  const Rational& d(long r) const { return d_.at(static_cast<std::size_t>(r)); }
  const std::vector<Rational>& d_table() const { return d_; }
  FormalDirichletSeries<Rational> d_series() const;

 private:
  long R_;
  std::vector<Rational> c_;
  std::vector<Rational> d_;
};

/// c((r)) by multiplicativity over the ideal factorization of (r).
Rational coeff_principal(const MockEigenform& f, long r);

/// d(r) = sum_{m^2 t = r, gcd(m, N) = 1} m^{2k-2} c(t).
Rational asai_coeff(const MockEigenform& f, long r);

}  // namespace pasai
