#pragma once

#include "pasai/arith/bigfloat.hpp"
#include "pasai/arith/rational.hpp"

namespace pasai {

struct BesselMomentReport {
  BigComplex lhs;
  BigComplex rhs;
  double rel_error = 0;
  bool agree = false;
};

/// Compares int_0^inf K_nu(a t) t^{mu-1} dt, by quadrature, with
/// 2^{mu-2} a^{-mu} Gamma((mu+nu)/2) Gamma((mu-nu)/2).
/// Throws std::domain_error unless mu > |nu| and a > 0.
BesselMomentReport bessel_k_moment_check(int nu, const Rational& mu, const Rational& a, double tol = 1e-6);

}  // namespace pasai
