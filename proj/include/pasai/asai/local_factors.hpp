#pragma once

#include <vector>

#include "pasai/arith/cyclotomic.hpp"
#include "pasai/asai/eigenform.hpp"
#include "pasai/characters/dirichlet.hpp"

namespace pasai {

/// 1 / G_l as a polynomial in X = l^{-s} (index = degree), untwisted. Valid at
/// every l prime to N, including p.
std::vector<Rational> local_factor_poly(const MockEigenform& f, long l);

/// 1 / G_l(s, chi, f) as a polynomial in X = l^{-s} with X -> chi(l) X; the
/// constant 1 when chi(l) = 0. Throws std::invalid_argument when l | N, or
/// l = p with chi(p) != 0.
std::vector<CyclotomicNumber> local_asai_factor(const MockEigenform& f, long l, const DirichletCharacter& chi);

struct EulerCheckReport {
  bool ok = true;
  long first_mismatch = 0;  // 0 when ok
  long bound = 0;
};

/// Expands prod_{l <= R, l !| N} G_l as a truncated Dirichlet series and
/// compares with d(r) for r <= R prime to N.
EulerCheckReport euler_vs_coefficients(const MockEigenform& f, long R);
/// Same comparison against caller-supplied coefficients.
EulerCheckReport euler_vs_series(const MockEigenform& f, const FormalDirichletSeries<Rational>& d);
/// Twisted version: d(r) chi(r) against prod G_l(s, chi, f).
EulerCheckReport euler_vs_coefficients_twisted(const MockEigenform& f, long R, const DirichletCharacter& chi);

struct OrdinaryData {
  std::vector<Rational> F;  // degree 4
  std::vector<Rational> H;  // degree 3, H = 1 + B_1 X + B_2 X^2 + B_3 X^3
  std::array<Rational, 4> B;
  Rational kappa;
  /// Satake values after relabeling: alpha_1(P), alpha_2(P), alpha_1(Pbar), alpha_2(Pbar).
  std::array<Rational, 4> alphas;
};

/// kappa = alpha_1(P) alpha_1(Pbar) made a p-adic unit by swapping
/// subscripts if needed; F, H and B_i built from the relabeled values.
/// Throws std::domain_error if no relabeling makes kappa a unit.
OrdinaryData ordinary_data(const MockEigenform& f);

/// [X^e] 1 / F(X) for 0 <= e < terms.
std::vector<Rational> inverse_F_coefficients(const OrdinaryData& od, std::size_t terms);

}  // namespace pasai
