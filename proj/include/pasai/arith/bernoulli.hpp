#pragma once

#include "pasai/arith/rational.hpp"

namespace pasai {

/// B_k with B_1 = -1/2, so that B_k(0) = B_k.
Rational bernoulli_number(unsigned k);
/// B_k(x) = sum_i C(k,i) B_i x^{k-i}.
Rational bernoulli_polynomial(unsigned k, const Rational& x);

}  // namespace pasai
