#include <gtest/gtest.h>

#include <sstream>

#include <numeric>
#include <random>

#include "pasai/arith/numtheory.hpp"
#include "pasai/arith/polynomial.hpp"
#include "pasai/asai/local_factors.hpp"

using namespace pasai;

namespace {

MockEigenform small_form(int k, long N, long D, long p, unsigned seed, long bound = 200) {
  std::mt19937_64 rng(seed);
  return MockEigenform::random(k, N, D, p, bound, rng);
}

QPoly lin(const Rational& a) { return {Rational(1), -a}; }

}  // namespace

TEST(QuadField, SplittingMatchesResidues) {
  for (long D : {3L, 4L, 7L, 8L, 11L}) {
    QuadField F(D);
    for (long l = 2; l <= 500; ++l) {
      if (!is_prime(l)) continue;
      Splitting expect;
      if (l == 2) {
        if (D % 2 == 0) expect = Splitting::ramified;
        else expect = mod_floor(-D, 8) == 1 ? Splitting::split : Splitting::inert;
      } else if (D % l == 0) {
        expect = Splitting::ramified;
      } else {
        bool square = false;
        for (long x = 1; x < l && !square; ++x) square = (x * x - mod_floor(-D, l)) % l == 0;
        expect = square ? Splitting::split : Splitting::inert;
      }
      ASSERT_EQ(F.splitting(l), expect) << D << " " << l;
    }
  }
  EXPECT_THROW(QuadField(5), std::invalid_argument);
}

TEST(Hecke, Power) {
  EXPECT_EQ(hecke_power(3, 5, 0), 1);
  EXPECT_EQ(hecke_power(3, 5, 2), 4);
  Rational a1(2), a2(Rational(3, 7));
  for (int e = 0; e <= 8; ++e) {
    Rational s = 0;
    for (int i = 0; i <= e; ++i) s += rational_pow(a1, i) * rational_pow(a2, e - i);
    EXPECT_EQ(hecke_power(a1 + a2, a1 * a2, e), s);
  }
}

TEST(Coefficients, Principal) {
  auto f = small_form(2, 1, 3, 7, 1);
  EXPECT_EQ(coeff_principal(f, 1), 1);
  // 13 splits in Q(sqrt -3), 5 is inert
  EXPECT_EQ(f.field.splitting(13), Splitting::split);
  EXPECT_EQ(coeff_principal(f, 13), f.eigenvalue(13, 0) * f.eigenvalue(13, 1));
  EXPECT_EQ(f.field.splitting(5), Splitting::inert);
  EXPECT_EQ(coeff_principal(f, 5), f.eigenvalue(5, 0));
  EXPECT_EQ(coeff_principal(f, 3), hecke_power(f.eigenvalue(3, 0), 3, 2));
}

TEST(Coefficients, AsaiCoeff) {
  for (int k : {2, 3, 4}) {
    auto f = small_form(k, 5, 3, 7, 2 + k);
    EXPECT_EQ(asai_coeff(f, 1), 1);
    EXPECT_EQ(asai_coeff(f, 4), coeff_principal(f, 4) + rational_pow(Rational(2), 2 * k - 2));
    EXPECT_EQ(asai_coeff(f, 30), coeff_principal(f, 30));
    // 25 = 5^2 but 5 | N, so only m = 1
    EXPECT_EQ(asai_coeff(f, 25), coeff_principal(f, 25));
    AsaiCoefficients table(f, 200);
    for (long r = 1; r <= 200; ++r) ASSERT_EQ(table.d(r), asai_coeff(f, r)) << r;
  }
}

TEST(Coefficients, Multiplicative) {
  auto f = small_form(3, 5, 7, 11, 9);
  AsaiCoefficients t(f, 100);
  for (long a = 1; a <= 100; ++a)
    for (long b = 1; a * b <= 100; ++b)
      if (std::gcd(a, b) == 1) ASSERT_EQ(t.d(a * b), t.d(a) * t.d(b));
}

TEST(LocalFactor, SplitMatchesRootProduct) {
  auto f = small_form(3, 1, 3, 7, 4);
  const long l = 13;
  const Rational A = 169;  // 13^{k-1}
  Rational a1 = 1, a2 = A, b1 = 13, b2 = 13;
  f.eigen[{l, 0}] = a1 + a2;
  f.eigen[{l, 1}] = b1 + b2;
  QPoly expect = poly_mul(poly_mul(lin(a1 * b1), lin(a1 * b2)), poly_mul(lin(a2 * b1), lin(a2 * b2)));
  auto got = local_factor_poly(f, l);
  trim(got);
  EXPECT_EQ(got, expect);
  EXPECT_EQ(got[1], -f.eigenvalue(l, 0) * f.eigenvalue(l, 1));
}

TEST(LocalFactor, InertAndRamified) {
  auto f = small_form(2, 1, 3, 7, 5);
  const long l = 5;  // inert
  Rational a = f.eigenvalue(l, 0);
  QPoly expect = poly_mul({1, -a, 25}, {1, 0, -25});
  auto got = local_factor_poly(f, l);
  trim(got);
  EXPECT_EQ(got, expect);
  // ramified at 3: alpha^2 roots with alpha_1 alpha_2 = 3
  Rational c = f.eigenvalue(3, 0);
  QPoly ram = poly_mul({1, -(c * c - 6), 9}, {1, -3});
  auto got3 = local_factor_poly(f, 3);
  trim(got3);
  EXPECT_EQ(got3, ram);
}

TEST(LocalFactor, TwistVanishesAtConductor) {
  auto f = small_form(2, 1, 3, 7, 6);
  auto chi = enumerate_characters(7)[1];
  auto one = local_asai_factor(f, 7, chi);
  EXPECT_EQ(one[0], CyclotomicNumber(chi.order(), 1));
  for (std::size_t i = 1; i < one.size(); ++i) EXPECT_TRUE(one[i].is_zero());
  EXPECT_THROW(local_asai_factor(small_form(2, 5, 3, 7, 6), 5, chi), std::invalid_argument);
  // twisted coefficients are chi(l)^i times the untwisted ones
  auto tw = local_asai_factor(f, 13, chi);
  auto base = local_factor_poly(f, 13);
  for (std::size_t i = 0; i < tw.size(); ++i) EXPECT_EQ(tw[i], chi.value(13).pow(static_cast<long>(i)) * base[i]);
}

TEST(EulerProduct, RandomForms) {
  std::mt19937_64 rng(2024);
  EXPECT_TRUE(euler_vs_coefficients(small_form(2, 1, 3, 7, 1), 1).ok);
  const long Ds[] = {3, 4, 7, 8, 11};
  for (int i = 0; i < 20; ++i) {
    int k = 2 + i % 3;
    long D = Ds[i % 5];
    QuadField F(D);
    long p = 3;
    while (!(is_prime(p) && F.splitting(p) == Splitting::split)) ++p;
    long N = (i % 4 == 0) ? 1 : std::vector<long>{5, 7, 11, 13}[static_cast<std::size_t>(i % 4)];
    if (N == p) N = 17;
    auto f = MockEigenform::random(k, N, D, p, 200, rng);
    auto rep = euler_vs_coefficients(f, 200);
    EXPECT_TRUE(rep.ok) << "form " << i << " mismatch at " << rep.first_mismatch;
  }
}

TEST(EulerProduct, CorruptedCoefficient) {
  auto f = small_form(2, 1, 3, 7, 8);
  auto d = AsaiCoefficients(f, 200).d_series();
  d[6] += 1;
  auto rep = euler_vs_series(f, d);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.first_mismatch, 6);
}

TEST(EulerProduct, Twisted) {
  auto f = small_form(2, 1, 3, 7, 10, 120);
  for (const auto& chi : enumerate_characters(7)) EXPECT_TRUE(euler_vs_coefficients_twisted(f, 120, chi).ok);
  auto chars49 = enumerate_characters(49);
  EXPECT_TRUE(euler_vs_coefficients_twisted(f, 120, chars49[7]).ok);
}

TEST(Ordinary, Example) {
  MockEigenform f;
  f.k = 2;
  f.field = QuadField(4);
  f.p = 5;
  f.p_satake = {1, 5, 1, 5};
  auto od = ordinary_data(f);
  EXPECT_EQ(od.kappa, 1);
  QPoly H = poly_mul(poly_mul(lin(5), lin(5)), lin(25));
  QPoly got = od.H;
  trim(got);
  EXPECT_EQ(got, H);
  EXPECT_EQ(od.B[0], 1);
  QPoly F = od.F;
  trim(F);
  EXPECT_EQ(F, poly_mul(lin(od.kappa), H));
}

TEST(Ordinary, Relabeling) {
  MockEigenform f;
  f.k = 3;
  f.field = QuadField(4);
  f.p = 5;
  f.p_satake = {25, 1, Rational(25, 2), 2};
  auto od = ordinary_data(f);
  EXPECT_EQ(od.kappa, 2);
  f.p_satake = {25, 1, 5, 5};
  EXPECT_THROW(ordinary_data(f), std::domain_error);
}

TEST(Ordinary, KappaRelationAndGeometricSeries) {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 20; ++i) {
    auto f = MockEigenform::random(2 + i % 3, 1, 3, 7, 343, rng);
    auto od = ordinary_data(f);
    auto dp = inverse_F_coefficients(od, 21);
    for (long v = 0; v <= 12; ++v) {
      Rational s = 0;
      for (long j = 0; j <= 3 && j <= v; ++j) s += od.B[static_cast<std::size_t>(j)] * dp[static_cast<std::size_t>(v - j)];
      ASSERT_EQ(s, rational_pow(od.kappa, v));
    }
    QPoly hf = poly_mul(od.H, dp);
    for (long e = 0; e <= 20; ++e) ASSERT_EQ(hf[static_cast<std::size_t>(e)], rational_pow(od.kappa, e));
    // d(p^e) agrees with [X^e] 1/F
    AsaiCoefficients t(f, 7 * 7 * 7);
    for (long e = 0, q = 1; e <= 3; ++e, q *= 7) EXPECT_EQ(t.d(q), dp[static_cast<std::size_t>(e)]);
  }
}

TEST(EigenformFile, RoundTripAndErrors) {
  std::mt19937_64 rng(5);
  auto f = MockEigenform::random(4, 2, 11, 3, 60, rng);
  std::stringstream io;
  write_eigenform(io, f);
  auto g = parse_eigenform(io);
  EXPECT_EQ(g.k, f.k);
  EXPECT_EQ(g.N, f.N);
  EXPECT_EQ(g.field.D(), 11);
  EXPECT_EQ(g.p_satake, f.p_satake);
  EXPECT_EQ(g.eigen, f.eigen);
  std::istringstream truncated("4 1 11");
  EXPECT_THROW(parse_eigenform(truncated), std::invalid_argument);
  std::istringstream bad_ideal("4 1 11 3\n-5 -27/5 -27/2 -2\n2 1 0\n");
  EXPECT_THROW(parse_eigenform(bad_ideal), std::invalid_argument);
  std::istringstream bad_satake("4 1 11 3\n1 1 1 1\n");
  EXPECT_THROW(parse_eigenform(bad_satake), std::invalid_argument);
}
