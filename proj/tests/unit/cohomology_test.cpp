#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "pasai/arith/numtheory.hpp"
#include "pasai/cohomology/bihomog.hpp"
#include "pasai/cohomology/periods.hpp"

using namespace pasai;

namespace {

QuadMatrix2 random_sl2(long D, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> U(-3, 3);
  QuadMatrix2 g = QuadMatrix2::identity(D);
  for (int t = 0; t < 3; ++t) {
    QuadMatrix2 up = QuadMatrix2::identity(D), low = QuadMatrix2::identity(D);
    up.b = QuadCoeff(Rational(U(rng), 2), Rational(U(rng), 3), D);
    low.c = QuadCoeff(U(rng), U(rng), D);
    g = g * up * low;
  }
  return g;
}

QuadMatrix2 integral(long a, long b, long c, long d, long D) {
  return {QuadCoeff::rational(a, D), QuadCoeff::rational(b, D), QuadCoeff::rational(c, D), QuadCoeff::rational(d, D)};
}

GammaCoefficientTable sample_table() {
  std::istringstream in(
      "# m l alpha a b\n"
      "0 0 1 1 0\n0 1 1 2 1\n0 2 3 1 1\n0 4 1 3 -1\n0 3 3 -1 2\n"
      "2 0 1 1 1\n");
  return GammaCoefficientTable::parse(in);
}

}  // namespace

TEST(QuadCoeffTest, FieldAndValuation) {
  QuadCoeff a(Rational(3, 5), 2, 3), b(1, Rational(-1, 25), 3);
  EXPECT_EQ(a * a.inverse(), QuadCoeff::rational(1, 3));
  EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
  EXPECT_EQ(a.valuation(5), -1);
  EXPECT_EQ(b.valuation(5), -2);
  EXPECT_EQ(QuadCoeff(25, 5, 3).valuation(5), 1);
}

TEST(SL2Action, IdentityCompositionInverse) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 3;
    BiHomogPoly P = BiHomogPoly::random(n, 3, 5, rng);
    EXPECT_EQ(sl2_act(QuadMatrix2::identity(3), P), P);
    QuadMatrix2 g1 = random_sl2(3, rng), g2 = random_sl2(3, rng);
    ASSERT_EQ(sl2_act(g1 * g2, P), sl2_act(g1, sl2_act(g2, P)));
    QuadCoeff beta(0, Rational(1, 5), 3);
    EXPECT_EQ(sl2_act(QuadMatrix2::translation(-beta), sl2_act(QuadMatrix2::translation(beta), P)), P);
  }
  BiHomogPoly P(1, 3);
  QuadMatrix2 bad = integral(2, 0, 0, 1, 3);
  EXPECT_THROW(sl2_act(bad, P), std::invalid_argument);
}

TEST(Nabla, Examples) {
  BiHomogPoly XYb(1, 3), XbY(1, 3), sym(1, 3);
  XYb.at(0, 1) = QuadCoeff::rational(1, 3);
  XbY.at(1, 0) = QuadCoeff::rational(1, 3);
  sym.at(0, 0) = QuadCoeff::rational(1, 3);
  sym.at(1, 1) = QuadCoeff::rational(1, 3);
  EXPECT_EQ(nabla(XYb).at(0, 0), QuadCoeff::rational(1, 3));
  EXPECT_EQ(nabla(XbY).at(0, 0), QuadCoeff::rational(-1, 3));
  EXPECT_EQ(nabla(sym).at(0, 0), QuadCoeff::rational(0, 3));
  EXPECT_THROW(nabla(BiHomogPoly(0, 3)), std::invalid_argument);
  std::mt19937_64 rng(5);
  auto A = BiHomogPoly::random(3, 3, 9, rng), B = BiHomogPoly::random(3, 3, 9, rng);
  QuadCoeff c(2, -1, 3);
  EXPECT_EQ(nabla(A * c + B), nabla(A) * c + nabla(B));
}

TEST(Clebsch, RestrictionAndTopComponent) {
  std::mt19937_64 rng(11);
  auto P = BiHomogPoly::random(2, 3, 9, rng);
  HomogPoly h = clebsch_project(P, 0);
  ASSERT_EQ(h.degree, 4);
  // coefficient of X^l Y^{4-l} collects i + j = 4 - l
  for (int l = 0; l <= 4; ++l) {
    QuadCoeff want = QuadCoeff::rational(0, 3);
    for (int i = 0; i <= 2; ++i)
      for (int j = 0; j <= 2; ++j)
        if (i + j == 4 - l) want += P.at(i, j);
    EXPECT_EQ(h.coeffs[static_cast<std::size_t>(l)], want);
  }
  // (X Ybar - Xbar Y)^n has top component (n+1) by repeated nabla: nabla^n / (n!)^2 of it
  for (int n = 1; n <= 4; ++n) {
    BiHomogPoly W(n, 3);
    for (int k = 0; k <= n; ++k)  // (X Ybar)^{n-k} (-Xbar Y)^k
      W.at(k, n - k) = QuadCoeff::rational(Rational((k % 2 ? -1 : 1) * binomial(n, k)), 3);
    HomogPoly top = clebsch_project(W, n);
    ASSERT_EQ(top.degree, 0);
    EXPECT_EQ(top.coeffs[0], QuadCoeff::rational(n + 1, 3)) << n;
  }
  EXPECT_THROW(clebsch_project(P, 3), std::out_of_range);
}

TEST(Clebsch, EquivariantForIntegralMatrices) {
  std::mt19937_64 rng(13);
  std::vector<QuadMatrix2> gs{integral(1, 1, 0, 1, 3), integral(0, -1, 1, 0, 3), integral(2, 3, 1, 2, 3),
                              integral(5, -2, 3, -1, 3)};
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= n; ++m)
      for (const auto& g : gs) {
        auto P = BiHomogPoly::random(n, 3, 7, rng);
        EXPECT_EQ(clebsch_project(sl2_act(g, P), m), sl2_act(g, clebsch_project(P, m)));
      }
}

TEST(DenominatorLemma, Grid) {
  for (long p : {5L, 7L})
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= n; ++m)
        for (int j = 0; j <= 2; ++j) {
          auto rep = denominator_lemma_check(n, m, p, j, 5, 3, 17);
          EXPECT_TRUE(rep.pass) << p << " " << n << " " << m << " " << j << " " << rep.post_min;
          if (j == 0) {
            EXPECT_GE(rep.pre_min, 0);
          }
        }
  auto rep = denominator_lemma_check(2, 1, 5, 1, 100);
  EXPECT_EQ(rep.post_bound, -3);
  EXPECT_TRUE(rep.pass);
  auto r0 = denominator_lemma_check(3, 0, 5, 2, 10);
  EXPECT_EQ(r0.post_bound, -12);
  EXPECT_EQ(r0.post_min, r0.pre_min);
  EXPECT_THROW(denominator_lemma_check(5, 0, 5, 1, 1), std::invalid_argument);
}

TEST(PsiIdentity, SmallN) {
  for (int n = 0; n <= 4; ++n) {
    auto rep = psi_identity_check(n);
    EXPECT_TRUE(rep.matches) << n;
    EXPECT_TRUE(rep.degrees_ok) << n;
    EXPECT_EQ(rep.components, 2 * n + 3);
  }
}

TEST(GammaFactor, TableHandling) {
  GammaCoefficientTable empty;
  EXPECT_TRUE(gamma_factor_I1(2, 0, 0, empty, 64).value.abs().is_zero());
  EXPECT_THROW(gamma_factor_I1(2, 0, 0, empty, 64, true), std::out_of_range);
  GammaCoefficientTable one;
  one.a[{0, 0, 1}] = 1;  // n = 2: alpha = 1 passes the parity filter
  auto g = gamma_factor_I1(2, 0, 0, one, 64);
  ASSERT_EQ(g.products.size(), 1u);
  // i * Gamma(2) Gamma(4)
  EXPECT_NEAR(g.value.im().to_double(), std::tgamma(2.0) * std::tgamma(4.0), 1e-12);
  GammaCoefficientTable wrong;
  wrong.a[{0, 0, 2}] = 5;  // alpha = 2 is filtered for n = 2, m = 0
  EXPECT_TRUE(gamma_factor_I1(2, 0, 0, wrong, 64).value.abs().is_zero());
  GammaCoefficientTable top;
  top.a[{0, 1, 3}] = 4;  // alpha = n + 1, halved; i^2 = -1
  EXPECT_NEAR(gamma_factor_I1(2, 0, 0, top, 64).value.re().to_double(), -2 * std::pow(std::tgamma(3.0), 2), 1e-12);
  EXPECT_TRUE(gamma_factor_I2(2, 0, 0, one, 64).reconstructed);
}

TEST(OmegaInfty, FormulaAndScaling) {
  BigComplex G(BigFloat(1.5, 128), BigFloat(0.5, 128));
  auto w1 = omega_infty(2, 0, 3, G);
  auto w2 = omega_infty(2, 0, 3, G * BigFloat(2L, 128));
  EXPECT_LT(distance(w1, w2 * BigFloat(2L, 128)), 1e-20);
  BigComplex one(BigFloat(1L, 128));
  double expect = std::pow(2 * M_PI, 4) / 3.0;
  EXPECT_NEAR(omega_infty(0, 0, 3, one).re().to_double(), expect, 1e-9);
  EXPECT_THROW(omega_infty(0, 0, 3, BigComplex(128)), std::domain_error);
}

class PairingFixture : public ::testing::Test {
 protected:
  void SetUp() override {
    std::mt19937_64 rng(19);
    f = MockEigenform::random(4, 1, 3, 7, 700, rng);
  }
  MockEigenform f;
};

TEST_F(PairingFixture, PairingSeries) {
  const long R = 300;
  AsaiCoefficients co(f, R);
  auto zero = pairing_series(co, f.k, 0, 6, 128);
  long double direct = 0;
  for (long r = 1; r <= R; ++r) direct += 2.0L * co.c(r).get_d() / std::pow(static_cast<long double>(r), 6.0L);
  EXPECT_NEAR(zero.value.re().to_double(), static_cast<double>(direct), 1e-12);
  auto plus = pairing_series(co, f.k, Rational(2, 7), 6, 128);
  auto minus = pairing_series(co, f.k, Rational(-2, 7), 6, 128);
  EXPECT_LT(distance(plus.value, minus.value), 1e-30);
  EXPECT_THROW(pairing_series(co, f.k, 0, 5, 128), std::invalid_argument);
  auto fine = pairing_series(f, Rational(1, 7), 6, 600, 128);
  auto coarse = pairing_series(f, Rational(1, 7), 6, 200, 128);
  EXPECT_LT(fine.tail_bound, coarse.tail_bound);
  EXPECT_LT(distance(fine.value, coarse.value), coarse.tail_bound);
}

TEST_F(PairingFixture, RationalityRatio) {
  auto table = sample_table();
  BigComplex omega(BigFloat(0.75, 128), BigFloat(0.25, 128));
  // even order-3 character mod 7, chi^2 primitive
  DirichletCharacter chi = DirichletCharacter::trivial(7);
  for (const auto& c : enumerate_characters(7))
    if (c.order() == 3) chi = c;
  ASSERT_EQ(chi.order(), 3);
  auto rep = rationality_ratio(f, chi, 2, 0, table, omega, 400, 128);
  EXPECT_TRUE(rep.algebraic_claim) << rep.gap << " " << rep.order_gap;
  EXPECT_LT(rep.gap, 1e-10);
  auto triv = rationality_ratio(f, DirichletCharacter::trivial(1), 2, 0, table, omega, 400, 128);
  EXPECT_TRUE(triv.algebraic_claim) << triv.gap;
  auto scaled = rationality_ratio(f, chi, 2, 0, table, omega * BigFloat(3L, 128), 400, 128);
  EXPECT_LT(distance(scaled.value * BigFloat(3L, 128), rep.value), 1e-20);
  EXPECT_THROW(rationality_ratio(f, chi, 2, 0, table, BigComplex(128), 400, 128), std::invalid_argument);
  EXPECT_THROW(rationality_ratio(f, chi, 3, 0, table, omega, 400, 128), std::invalid_argument);
}
