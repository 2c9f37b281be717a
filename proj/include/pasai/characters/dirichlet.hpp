#pragma once

#include <optional>
#include <vector>

#include "pasai/arith/bigfloat.hpp"
#include "pasai/arith/cyclotomic.hpp"

namespace pasai {

/// Dirichlet character mod M with values in mu_order. Stored as a full table
/// of exponents: chi(a) = zeta_order^{e(a)}, e(a) = -1 off the unit group.
class DirichletCharacter {
 public:
  /// Trivial character mod M (zero on non-units, constantly 1 mod 1).
  static DirichletCharacter trivial(long modulus);
  /// Table of exponents mod order, length modulus, -1 on non-units. The
  /// order is reduced to the true order of the character.
  static DirichletCharacter from_exponents(long modulus, long order, std::vector<long> exps);

  long modulus() const { return modulus_; }
  long order() const { return order_; }
  /// Exponent of chi(a) in mu_order, or -1 when gcd(a, M) > 1.
  long exponent(long a) const { return exps_[static_cast<std::size_t>(mod_floor(a, modulus_))]; }
  CyclotomicNumber value(long a) const;
  const std::vector<long>& exponents() const { return exps_; }

  bool is_trivial() const { return order_ == 1; }
  bool is_even() const { return exponent(-1) == 0; }

  DirichletCharacter conj() const;
  DirichletCharacter pow(long e) const;
  /// The character mod a multiple of the modulus obtained by composition.
  DirichletCharacter induce(long new_modulus) const;

  friend DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b);
  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.order_ == b.order_ && a.exps_ == b.exps_;
  }

 private:
  long modulus_ = 1;
  long order_ = 1;
  std::vector<long> exps_{0};
};

/// All phi(M) characters mod M, trivial first.
std::vector<DirichletCharacter> enumerate_characters(long M);

long conductor(const DirichletCharacter& chi);
/// The primitive character mod the conductor inducing chi.
DirichletCharacter primitive_character(const DirichletCharacter& chi);

struct GaussSumResult {
  CyclotomicNumber value;
  long conductor = 1;
};

/// G(chi) of the primitive character attached to chi, in Q(zeta_{lcm(C, ord)}).
GaussSumResult gauss_sum(const DirichletCharacter& chi);

struct GeneralizedGaussSum {
  CyclotomicNumber direct;
  CyclotomicNumber closed_form;
  bool matches = false;
};

/// G_{M,p^j}(chi) = sum_{a mod p^j} chi(a) zeta_{p^j}^{aM}, chi read through its
/// primitive character and vanishing on pZ. Also returns the closed form
/// p^{j-j_chi} G(chi) conj(chi)(M / p^{j-j_chi}) (0 unless p^{j-j_chi} | M).
/// Throws std::invalid_argument if the conductor is not a power of p or
/// exceeds p^j.
GeneralizedGaussSum generalized_gauss_sum(const DirichletCharacter& chi, long M, long p, int j);

/// B_{k,psi} = C^{k-1} sum_{a mod C} psi(a) B_k(a / C) for the primitive psi.
CyclotomicNumber generalized_bernoulli(unsigned k, const DirichletCharacter& psi);

/// algebraic * (2 pi i)^{two_pi_i_power}.
struct TranscendentalValue {
  long two_pi_i_power = 0;
  CyclotomicNumber algebraic;
  BigComplex evaluate(long prec) const;
  friend bool operator==(const TranscendentalValue& a, const TranscendentalValue& b) {
    return a.two_pi_i_power == b.two_pi_i_power && a.algebraic == b.algebraic;
  }
};

/// L(k, psi) = -(-2 pi i)^k G(psi) B_{k, conj psi} / (2 k! C^k) for even k and
/// even psi (read as its primitive character). Throws std::domain_error on
/// parity violations.
TranscendentalValue L_special_exact(unsigned k, const DirichletCharacter& psi);

struct LTruncation {
  BigComplex value;
  BigFloat tail_bound;  // R^{1 - Re s} / (Re s - 1)
};

/// sum_{n <= R} psi(n) n^{-s}. Throws std::domain_error for Re s <= 1.
LTruncation L_truncated(const BigComplex& s, const DirichletCharacter& psi, long R, long prec);
LTruncation L_truncated_serial(const BigComplex& s, const DirichletCharacter& psi, long R, long prec);

struct NormalizedL {
  CyclotomicNumber value;
  long conductor = 1;
  long j_chi = 0;
  /// -j_chi (k + 1): lower bound for the p-adic valuation.
  long valuation_bound = 0;
  std::optional<Rational> valuation;  // set when the value is nonzero and p is known
};

/// L(k, conj chi^2) / (G(conj chi^2) (2 pi)^k). chi^2 must be primitive and
/// even. Throws std::domain_error otherwise.
NormalizedL normalized_L(const DirichletCharacter& chi, unsigned k);

}  // namespace pasai
