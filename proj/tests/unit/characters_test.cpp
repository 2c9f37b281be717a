#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "pasai/arith/numtheory.hpp"
#include "pasai/arith/valuation.hpp"
#include "pasai/characters/dirichlet.hpp"

using namespace pasai;

namespace {

const DirichletCharacter& quadratic_mod(long p) {
  static std::vector<DirichletCharacter> cache;
  for (const auto& c : cache)
    if (c.modulus() == p) return c;
  for (const auto& c : enumerate_characters(p))
    if (c.order() == 2) cache.push_back(c);
  return cache.back();
}

// Partial sum of psi(n) n^{-2} up to R, in long double.
long double partial(const DirichletCharacter& psi, long R) {
  long double s = 0;
  for (long n = R; n >= 1; --n) {
    long e = psi.exponent(n);
    if (e < 0) continue;
    long double v = std::cos(2.0L * M_PIl * e / psi.order());
    s += v / (static_cast<long double>(n) * n);
  }
  return s;
}

// Richardson extrapolation over complete periods; the tail has an expansion
// in integer powers of 1/R.
long double extrapolated_L2(const DirichletCharacter& psi) {
  const int levels = 6;
  std::vector<long double> t(levels);
  for (int i = 0; i < levels; ++i) t[i] = partial(psi, psi.modulus() * 2000L << i);
  for (int order = 1; order < levels; ++order)
    for (int i = levels - 1; i >= order; --i) {
      long double f = std::ldexp(1.0L, order);
      t[i] = (f * t[i] - t[i - 1]) / (f - 1);
    }
  return t[levels - 1];
}

}  // namespace

TEST(Characters, Enumerate) {
  auto one = enumerate_characters(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].exponent(0), 0);
  auto five = enumerate_characters(5);
  ASSERT_EQ(five.size(), 4u);
  EXPECT_TRUE(five[0].is_trivial());
  int even = 0;
  for (const auto& c : five) even += c.is_even();
  EXPECT_EQ(even, 2);
  EXPECT_EQ(enumerate_characters(8).size(), 4u);
  for (long M = 1; M <= 60; ++M) {
    auto chars = enumerate_characters(M);
    ASSERT_EQ(static_cast<long>(chars.size()), euler_phi(M));
    for (std::size_t i = 0; i < chars.size(); ++i)
      for (std::size_t k = i + 1; k < chars.size(); ++k) ASSERT_FALSE(chars[i] == chars[k]) << M;
  }
}

TEST(Characters, Multiplicative) {
  for (long M : {8L, 9L, 12L, 15L, 16L, 25L, 27L}) {
    for (const auto& chi : enumerate_characters(M)) {
      EXPECT_EQ(chi.exponent(1), 0);
      for (long a = 0; a < M; ++a)
        for (long b = 0; b < M; ++b) {
          if (std::gcd(a, M) != 1 || std::gcd(b, M) != 1) {
            if (std::gcd(a, M) != 1) ASSERT_EQ(chi.exponent(a), -1);
            continue;
          }
          ASSERT_EQ(mod_floor(chi.exponent(a) + chi.exponent(b), chi.order()), chi.exponent(a * b));
        }
    }
  }
}

TEST(Characters, Conductor) {
  EXPECT_EQ(conductor(DirichletCharacter::trivial(9)), 1);
  EXPECT_EQ(conductor(quadratic_mod(5)), 5);
  auto induced = quadratic_mod(3).induce(9);
  EXPECT_EQ(conductor(induced), 3);
  EXPECT_EQ(primitive_character(induced), quadratic_mod(3));
}

TEST(Characters, Orthogonality) {
  for (long M = 1; M <= 50; ++M) {
    auto chars = enumerate_characters(M);
    for (long a = 1; a < M + (M == 1); ++a) {
      if (std::gcd(a, M) != 1) continue;
      for (long b = 1; b < M + (M == 1); ++b) {
        if (std::gcd(b, M) != 1) continue;
        long L = 1;
        for (const auto& chi : chars) L = lcm_of(L, chi.order());
        std::vector<long> counts(static_cast<std::size_t>(L), 0);
        for (const auto& chi : chars)
          ++counts[static_cast<std::size_t>(mod_floor((chi.exponent(a) - chi.exponent(b)) * (L / chi.order()), L))];
        auto s = CyclotomicNumber::from_exponent_counts(L, counts);
        ASSERT_EQ(s, CyclotomicNumber(1, a == b ? euler_phi(M) : 0)) << M << " " << a << " " << b;
      }
    }
  }
}

TEST(Characters, DiracIdentity) {
  for (long p : {3L, 5L})
    for (int j = 1; j <= 2; ++j) {
      long pj = ipow(p, j);
      auto chars = enumerate_characters(pj);
      for (long a = 1; a < pj; ++a) {
        if (a % p == 0) continue;
        for (long y = 0; y < pj; ++y) {
          CyclotomicNumber s(1);
          for (const auto& chi : chars) s += chi.conj().value(a) * chi.value(y);
          ASSERT_EQ(s, CyclotomicNumber(1, y == a ? euler_phi(pj) : 0));
        }
      }
    }
}

TEST(GaussSum, Examples) {
  EXPECT_EQ(gauss_sum(DirichletCharacter::trivial(7)).value, CyclotomicNumber(1, 1));
  auto g = gauss_sum(quadratic_mod(5)).value;
  EXPECT_EQ(g * g, CyclotomicNumber(1, 5));
  for (long p : {5L, 7L, 11L, 13L}) {
    for (const auto& chi : enumerate_characters(p)) {
      if (chi.is_trivial()) continue;
      auto G = gauss_sum(chi).value;
      auto Gbar = gauss_sum(chi.conj()).value;
      EXPECT_EQ(G * Gbar, CyclotomicNumber(1, chi.is_even() ? p : -p));
      EXPECT_EQ(G * G.conj(), CyclotomicNumber(1, p));
    }
  }
  for (const auto& chi : enumerate_characters(27)) {
    auto r = gauss_sum(chi);
    EXPECT_EQ(r.value * r.value.conj(), CyclotomicNumber(1, r.conductor));
  }
}

TEST(GaussSum, GeneralizedExamples) {
  for (const auto& chi : enumerate_characters(9)) {
    if (conductor(chi) != 9) continue;
    auto r = generalized_gauss_sum(chi, 3, 3, 2);
    EXPECT_TRUE(r.direct.is_zero());
    EXPECT_TRUE(r.matches);
  }
  auto q3 = quadratic_mod(3);
  auto r = generalized_gauss_sum(q3, 3, 3, 2);
  EXPECT_EQ(r.direct, gauss_sum(q3).value * Rational(3));
  EXPECT_TRUE(r.matches);
  for (long p : {3L, 5L, 7L}) {
    auto t = generalized_gauss_sum(DirichletCharacter::trivial(p), 0, p, 1);
    EXPECT_EQ(t.direct, CyclotomicNumber(1, p - 1));
  }
  EXPECT_THROW(generalized_gauss_sum(enumerate_characters(9)[1], 1, 3, 1), std::invalid_argument);
}

// The closed form holds for nontrivial characters. For the trivial character
// the sum is the Ramanujan sum c_{p^j}(M), which the closed form misses.
TEST(GaussSum, GeneralizedExhaustive) {
  for (long p : {3L, 5L})
    for (int j = 1; j <= 3; ++j) {
      long pj = ipow(p, j);
      for (const auto& chi : enumerate_characters(pj))
        for (long M = 0; M <= pj; ++M) {
          auto r = generalized_gauss_sum(chi, M, p, j);
          if (!chi.is_trivial()) {
            ASSERT_TRUE(r.matches) << p << " " << j << " M=" << M;
            continue;
          }
          long ramanujan = M % pj == 0 ? euler_phi(pj) : (M % (pj / p) == 0 ? -pj / p : 0);
          ASSERT_EQ(r.direct, CyclotomicNumber(1, ramanujan));
        }
    }
}

TEST(Bernoulli, Generalized) {
  EXPECT_EQ(generalized_bernoulli(2, DirichletCharacter::trivial(1)), CyclotomicNumber(1, Rational(1, 6)));
  EXPECT_EQ(generalized_bernoulli(1, quadratic_mod(4)), CyclotomicNumber(1, Rational(-1, 2)));
  for (long M : {4L, 5L, 7L, 9L})
    for (const auto& psi : enumerate_characters(M))
      if (!psi.is_even())
        for (unsigned k : {2u, 4u}) EXPECT_TRUE(generalized_bernoulli(k, psi).is_zero());
}

TEST(Bernoulli, GeneralizedDenominator) {
  for (long p : {3L, 5L})
    for (int j = 1; j <= 2; ++j)
      for (const auto& chi : enumerate_characters(ipow(p, j))) {
        if (chi.is_trivial()) continue;
        long jchi = 0;
        for (long c = conductor(chi); c > 1; c /= p) ++jchi;
        for (unsigned k = 1; k <= 6; ++k) {
          auto B = generalized_bernoulli(k, chi.conj());
          if (B.is_zero()) continue;
          EXPECT_GE(padic_valuation(B, p), -jchi) << p << " " << j << " k=" << k;
        }
      }
}

TEST(LValues, SpecialExact) {
  auto z2 = L_special_exact(2, DirichletCharacter::trivial(1));
  EXPECT_EQ(z2.two_pi_i_power, 2);
  EXPECT_EQ(z2.algebraic, CyclotomicNumber(1, Rational(-1, 24)));
  EXPECT_NEAR(z2.evaluate(128).re().to_double(), M_PI * M_PI / 6, 1e-15);
  auto z4 = L_special_exact(4, DirichletCharacter::trivial(1));
  EXPECT_NEAR(z4.evaluate(128).re().to_double(), std::pow(M_PI, 4) / 90, 1e-14);
  auto psi = quadratic_mod(5);
  auto l = L_special_exact(2, psi).evaluate(128);
  EXPECT_NEAR(l.re().to_double(), static_cast<double>(extrapolated_L2(psi)), 1e-17);
  EXPECT_LT(std::abs(l.re().to_double() - static_cast<double>(extrapolated_L2(psi))), 1e-16);
  EXPECT_NEAR(l.im().to_double(), 0, 1e-30);
  EXPECT_THROW(L_special_exact(3, psi), std::domain_error);
  EXPECT_THROW(L_special_exact(2, quadratic_mod(7)), std::domain_error);
}

TEST(LValues, Truncated) {
  BigComplex two(BigFloat(2L, 128));
  auto z = L_truncated(two, DirichletCharacter::trivial(1), 1000000, 128);
  EXPECT_NEAR(z.value.re().to_double(), M_PI * M_PI / 6, z.tail_bound.to_double());
  EXPECT_NEAR(z.value.re().to_double(), 1.644934, 2e-6);
  EXPECT_EQ(L_truncated(two, quadratic_mod(7), 1, 128).value.re().to_double(), 1.0);
  auto six = L_truncated(two, DirichletCharacter::trivial(6), 1000000, 128);
  EXPECT_NEAR(six.value.re().to_double(), M_PI * M_PI / 6 * 0.75 * 8 / 9, six.tail_bound.to_double());
  auto serial = L_truncated_serial(two, quadratic_mod(5), 20000, 128);
  auto par = L_truncated(two, quadratic_mod(5), 20000, 128);
  EXPECT_LT(distance(serial.value, par.value), 1e-35);
  EXPECT_THROW(L_truncated(BigComplex(BigFloat(1L, 128)), quadratic_mod(5), 10, 128), std::domain_error);
}

TEST(LValues, Normalized) {
  EXPECT_EQ(normalized_L(DirichletCharacter::trivial(1), 2).value, CyclotomicNumber(1, Rational(1, 24)));
  EXPECT_EQ(normalized_L(DirichletCharacter::trivial(1), 4).value, CyclotomicNumber(1, Rational(1, 1440)));
  EXPECT_THROW(normalized_L(quadratic_mod(5), 2), std::domain_error);
  for (const auto& chi : enumerate_characters(5)) {
    if (chi.order() != 4) continue;
    auto n = normalized_L(chi, 2);
    auto psi = chi.pow(2).conj();
    BigFloat two_pi = BigFloat::pi(128) * BigFloat(2L, 128);
    auto back = embed_complex(n.value * gauss_sum(psi).value, 128) * pow(two_pi, 2L);
    EXPECT_NEAR(back.re().to_double(), static_cast<double>(extrapolated_L2(psi)), 1e-16);
    EXPECT_NEAR(back.im().to_double(), 0, 1e-30);
    ASSERT_TRUE(n.valuation.has_value());
    EXPECT_GE(*n.valuation, n.valuation_bound);
  }
}
