#pragma once

#include <stdexcept>
#include <vector>

namespace pasai {

/// Truncated Dirichlet series sum_{n <= R} a(n) n^{-s}; T is Rational or
/// CyclotomicNumber.
template <class T>
class FormalDirichletSeries {
 public:
  FormalDirichletSeries(long bound, T zero) : zero_(zero), coeffs_(static_cast<std::size_t>(bound) + 1, zero) {}

  long bound() const { return static_cast<long>(coeffs_.size()) - 1; }
  const T& operator[](long n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  T& operator[](long n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const T& zero() const { return zero_; }

  /// Series supported on powers of l: coefficient at l^e is c[e].
  static FormalDirichletSeries prime_power_series(long l, const std::vector<T>& c, long bound, T zero) {
    FormalDirichletSeries s(bound, zero);
    long q = 1;
    for (std::size_t e = 0; e < c.size() && q <= bound; ++e) {
      s[q] = c[e];
      if (q > bound / l) break;
      q *= l;
    }
    return s;
  }

  /// Truncated Dirichlet convolution.
  friend FormalDirichletSeries operator*(const FormalDirichletSeries& a, const FormalDirichletSeries& b) {
    if (a.bound() != b.bound()) throw std::invalid_argument("FormalDirichletSeries: bound mismatch");
    const long R = a.bound();
    FormalDirichletSeries out(R, a.zero_);
    for (long m = 1; m <= R; ++m) {
      if (a[m] == a.zero_) continue;
      for (long n = 1; m * n <= R; ++n) {
        if (b[n] == b.zero_) continue;
        out[m * n] += a[m] * b[n];
      }
    }
    return out;
  }

 private:
  T zero_;
  std::vector<T> coeffs_;
};

/// First terms of 1 / P(X) as a power series; P(0) must be 1.
template <class T>
std::vector<T> series_inverse(const std::vector<T>& P, std::size_t terms, const T& zero) {
  std::vector<T> out(terms, zero);
  if (terms == 0) return out;
  out[0] = P.at(0);
  for (std::size_t n = 1; n < terms; ++n) {
    T acc = zero;
    for (std::size_t i = 1; i < P.size() && i <= n; ++i) acc += P[i] * out[n - i];
    out[n] = zero - acc;
  }
  return out;
}

}  // namespace pasai
