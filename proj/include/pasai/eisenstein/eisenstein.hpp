#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "pasai/arith/bigfloat.hpp"
#include "pasai/arith/cyclotomic.hpp"
#include "pasai/characters/dirichlet.hpp"

namespace pasai {

struct LevelParams {
  long N = 1;
  long p = 3;
  int j = 1;
  int k = 4;
  long D = 4;  // F = Q(sqrt(-D)), used by the conjugation path

  long level() const;  // N p^{2j}
  /// Throws std::invalid_argument unless k >= 4 is even, p is an odd prime
  /// prime to N D, N >= 1 and j >= 0.
  void validate() const;
};

struct IntMatrix2 {
  long a = 1, b = 0, c = 0, d = 1;
  long det() const { return a * d - b * c; }
};

/// Membership in Gamma_0^beta(N) by the congruences a = d mod p^j, c = 0 mod N p^{2j}.
/// Throws std::invalid_argument if det != 1.
bool gamma0_beta_contains(const LevelParams& P, const IntMatrix2& g);

/// Membership by exact conjugation gamma_beta g gamma_beta^{-1} over Q(sqrt(-D)),
/// beta = a_rep sqrt(-D) / (2 p^j) with a_rep an even unit mod p^j: integrality in
/// O_F and lower-left entry in N Z.
bool gamma0_beta_contains_conjugation(const LevelParams& P, const IntMatrix2& g, long a_rep = 2);

/// Random determinant-one matrix; kind 0 is unconstrained, 1 has c = 0 mod Np^{2j},
/// 2 is a member of Gamma_0^beta(N).
IntMatrix2 random_unimodular(const LevelParams& P, int kind, long bound, std::mt19937_64& rng);

/// Pairs (c, d), |c|, |d| <= H, gcd 1, c = 0 mod N p^{2j}, d = +-1 mod p^j,
/// one per +- pair (c > 0, or c = 0 and d > 0).
std::vector<std::pair<long, long>> enumerate_lambda(const LevelParams& P, long H);

/// sigma_{k-1}^{(0,v')}(l) = sum_{l' | l, l / l' = 0 mod M} sgn(l') l'^{k-1} zeta_M^{v' l'}.
CyclotomicNumber sigma_twisted(const LevelParams& P, long v, long l);

struct ConstantTermReport {
  CyclotomicNumber value;
  /// W(psi, psi1) vanishes off the diagonal, so every L(k, psi1) / L(k, psi)
  /// ratio that survives is 1.
  bool off_diagonal_zero = false;
  long pairs_checked = 0;
};

struct QExpansion {
  LevelParams params;
  std::vector<CyclotomicNumber> coeffs;  // index 0..T
  /// max over coefficients of the p-valuation of rational coefficient denominators.
  long c_j = 0;
};

/// Exact and analytic q-expansion data of E^beta_k(0, z) at level N p^{2j}.
/// Character data is built once in the constructor.
class EisensteinSeries {
 public:
  explicit EisensteinSeries(const LevelParams& P);

  const LevelParams& params() const { return P_; }
  long level() const { return M_; }

  ConstantTermReport constant_term_report() const;
  CyclotomicNumber constant_term() const { return constant_term_report().value; }

  /// a_{l''} via the functional equation, with the Euler factors at q | N p
  /// that the imprimitive characters require. Throws for l'' < 1.
  CyclotomicNumber higher_coeff_exact(long l) const;
  /// The same sum using (C/M)^k / (G(psi) B_{k, conj psi}) without those factors.
  CyclotomicNumber higher_coeff_literal(long l) const;
  /// a_{l''} from a truncated Moebius series for zeta_+ and the explicit (-2 pi i)^k.
  BigComplex higher_coeff_analytic(long l, long prec, long terms) const;
  BigComplex higher_coeff_analytic_serial(long l, long prec, long terms) const;

  /// j = 0 only: -(2k / (B_k N^k prod_{q|N}(1 - q^{-k}))) sum_{d | l} d^{k-1} c_N(d).
  QExpansion classical_reduction(long T) const;
  QExpansion qexpansion(long T) const;

 private:
  struct Term {
    DirichletCharacter psi;
    CyclotomicNumber weight;          // A(psi) X_psi / phi(M)
    CyclotomicNumber weight_literal;  // without the Euler factors
  };
  CyclotomicNumber coefficient(long l, bool literal) const;
  CyclotomicNumber gauss_at(const DirichletCharacter& psi, long d) const;
  const std::vector<BigFloat>& zeta_plus(long prec, long terms, bool parallel) const;
  BigComplex analytic(long l, long prec, long terms, bool parallel) const;

  LevelParams P_;
  long M_;
  long phi_;
  std::vector<long> units_;
  std::vector<long> V_;
  std::vector<Term> terms_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<long, long>, std::vector<BigFloat>> zeta_plus_;
};

}  // namespace pasai
