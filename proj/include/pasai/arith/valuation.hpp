#pragma once

#include "pasai/arith/cyclotomic.hpp"

namespace pasai {

/// Normalized p-adic valuation (v(p) = 1) of a nonzero x in Q(zeta_m) at the
/// prime above p selected by the embedding zeta_{m'} -> omega^t, where
/// m = p^e m', m' | p - 1 and omega is the Teichmuller lift of
/// g^{(p-1)/m'} for the smallest primitive root g mod p. Exact.
///
/// Throws std::domain_error for x = 0 and std::invalid_argument when the
/// prime-to-p part of the order does not divide p - 1.
Rational padic_valuation_at(const CyclotomicNumber& x, long p, long t);

/// Minimum of padic_valuation_at over all primes above p. For orders that are
/// a power of p this is the unique valuation.
Rational padic_valuation(const CyclotomicNumber& x, long p);

}  // namespace pasai
