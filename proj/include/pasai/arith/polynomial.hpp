#pragma once

#include <vector>

#include "pasai/arith/rational.hpp"

namespace pasai {

/// Dense polynomial over Q, index = degree. Kept trimmed (no trailing zeros);
/// the zero polynomial is the empty vector.
using QPoly = std::vector<Rational>;

void trim(QPoly& a);
long degree(const QPoly& a);  // -1 for zero
QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_scale(const QPoly& a, const Rational& c);
/// Quotient and remainder; throws on division by zero.
std::pair<QPoly, QPoly> poly_divmod(const QPoly& a, const QPoly& b);
Rational poly_eval(const QPoly& a, const Rational& x);

struct ExtGcd {
  QPoly g;  // monic
  QPoly s;
  QPoly t;  // s*a + t*b = g
};
ExtGcd poly_ext_gcd(const QPoly& a, const QPoly& b);

/// Res(a, b) by the Euclidean remainder sequence over Q.
Rational resultant(const QPoly& a, const QPoly& b);

/// The m-th cyclotomic polynomial as integer coefficients (cached).
const std::vector<long>& cyclotomic_polynomial(long m);
QPoly cyclotomic_qpoly(long m);

}  // namespace pasai
