#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pasai/arith/bigfloat.hpp"
#include "pasai/asai/local_factors.hpp"
#include "pasai/characters/dirichlet.hpp"

namespace pasai {

/// How the Dirichlet series behind the coset values is cut off.
///  p_complete: r = p^e r2 with r2 <= R and every e; the p-part is summed
///              in closed form from 1/F(p^{-s}).
///  plain:      r <= R.
enum class Truncation { p_complete, plain };

struct DistParams {
  MockEigenform f;
  BigFloat s{BigFloat(4L, 128)};
  long R = 100000;
  long prec = 128;
  Truncation mode = Truncation::p_complete;
};

struct CosetValue {
  long a = 1;
  int j = 1;
  BigComplex value;
  double tail_bound = 0;
};

struct RelationReport {
  BigComplex lhs;
  BigComplex rhs;
  double gap = 0;
  double allowed = 0;
  bool pass = false;
};

/// The distributions mu~_s and mu_s on Z_p^x attached to a mock eigenform.
/// Bucketed partial sums are computed once per level and cached.
class Distribution {
 public:
  /// d_override replaces d(r) (index r, size R + 1); od_override replaces the
  /// ordinary data (used for negative controls). Throws std::domain_error for
  /// s <= k + 1 and std::invalid_argument for R < p^2 or prec < 64.
  explicit Distribution(DistParams params, std::optional<std::vector<Rational>> d_override = std::nullopt,
                        std::optional<OrdinaryData> od_override = std::nullopt);

  const DistParams& params() const { return params_; }
  const OrdinaryData& ordinary() const { return od_; }
  long p() const { return params_.f.p; }

  /// sum_{r <= R} d(r) e^{2 pi i r b} r^{-s}; tail bound A R^{k+1-s} / (s-k-1)
  /// with A = max |d(r)| / r^k.
  BigComplex P_s(const Rational& b) const;
  double plain_tail_bound() const { return plain_tail_; }

  CosetValue mu_tilde(long a, int j) const;
  CosetValue mu_symmetrized(long a, int j) const;
  RelationReport verify_distribution_relation(long a, int j) const;
  /// Every unit a mod p^j, evaluated in parallel.
  std::vector<RelationReport> verify_all_relations(int j) const;

  /// sum_{a mod p^j} chi(a) mu(a + p^j Z_p), chi read through its primitive
  /// character. Throws std::invalid_argument when j < j_chi.
  BigComplex integrate_character(const DirichletCharacter& chi, int j, bool symmetrized = false) const;
  /// p^{j_chi (s-1)} kappa^{-j_chi} G(chi) G(s, conj chi, f).
  BigComplex interpolation_rhs(const DirichletCharacter& chi) const;
  /// interpolation_rhs with the trivial-character value replaced by
  /// G'(s) (1 - p^{s-1}/kappa) / (1 - kappa p^{-s}).
  BigComplex interpolation_rhs_corrected(const DirichletCharacter& chi) const;
  /// G(s, chi, f) = sum_{r <= R, p !| r} chi(r) d(r) r^{-s}.
  BigComplex twisted_asai(const DirichletCharacter& chi) const;
  /// Tail bound attached to coset values at level j.
  double coset_tail_bound(int j) const;

 private:
  struct Level {
    std::vector<BigComplex> coprime;  // r2 = t mod p^j, p !| r2
    std::vector<BigComplex> all;      // r = u mod p^j (plain mode)
    std::vector<BigComplex> roots;    // zeta_{p^j}^u
  };
  const Level& level(int j) const;
  BigComplex P_level(long a, int i, int j) const;
  CyclotomicNumber primitive_value(const DirichletCharacter& prim, long a) const;

  DistParams params_;
  OrdinaryData od_;
  std::vector<Rational> d_;
  BigFloat X_;            // p^{-s}
  BigFloat invF_;         // 1 / F(X)
  std::vector<BigFloat> dpX_;  // d_p(e) X^e
  double plain_tail_ = 0;
  double coprime_tail_ = 0;
  mutable std::mutex mu_;
  mutable std::map<int, std::shared_ptr<Level>> levels_;
};

}  // namespace pasai
