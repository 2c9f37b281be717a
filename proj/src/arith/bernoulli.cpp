#include "pasai/arith/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace pasai {

Rational bernoulli_number(unsigned k) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= k) {
    unsigned n = static_cast<unsigned>(cache.size());
    Rational s = 0;
    for (unsigned i = 0; i < n; ++i) s += Rational(binomial(n + 1, i)) * cache[i];
    cache.push_back(-s / (n + 1));
  }
  return cache[k];
}

Rational bernoulli_polynomial(unsigned k, const Rational& x) {
  Rational r = 0, xp = 1;
  for (unsigned i = 0; i <= k; ++i) {
    r += Rational(binomial(k, k - i)) * bernoulli_number(k - i) * xp;
    xp *= x;
  }
  return r;
}

}  // namespace pasai
