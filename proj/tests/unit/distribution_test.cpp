#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pasai/arith/numtheory.hpp"
#include "pasai/distribution/distribution.hpp"

using namespace pasai;

namespace {

constexpr long kR = 20000;

DistParams make_params(int k, long p, unsigned seed, Truncation mode = Truncation::p_complete, long R = kR) {
  std::mt19937_64 rng(seed);
  DistParams P;
  P.f = MockEigenform::random(k, 1, 11, p, R, rng);
  P.s = BigFloat(static_cast<long>(k + 3), 128);
  P.R = R;
  P.prec = 128;
  P.mode = mode;
  return P;
}

std::vector<Rational> only_d1(long R) {
  std::vector<Rational> d(static_cast<std::size_t>(R) + 1, 0);
  d[1] = 1;
  return d;
}

}  // namespace

TEST(PSeries, Examples) {
  auto P = make_params(2, 3, 1);
  Distribution trivial(P, only_d1(P.R));
  EXPECT_NEAR(trivial.P_s(0).re().to_double(), 1.0, 1e-30);
  Distribution dist(P);
  auto a = dist.P_s(Rational(2, 9));
  auto b = dist.P_s(Rational(11, 9));
  EXPECT_LT(distance(a, b), 1e-30);
  // alternating oracle
  AsaiCoefficients t(P.f, P.R);
  long double alt = 0;
  for (long r = P.R; r >= 1; --r) alt += (r % 2 ? -1.0L : 1.0L) * t.d(r).get_d() / std::pow(static_cast<long double>(r), 5.0L);
  EXPECT_NEAR(dist.P_s(Rational(1, 2)).re().to_double(), static_cast<double>(alt), 1e-15);
  EXPECT_GT(dist.plain_tail_bound(), 0);
}

TEST(PSeries, RejectsBadParameters) {
  auto P = make_params(2, 3, 1);
  P.s = BigFloat(3L, 128);
  EXPECT_THROW(Distribution{P}, std::domain_error);
  P = make_params(2, 3, 1);
  P.R = 5;
  EXPECT_THROW(Distribution(P, only_d1(5)), std::invalid_argument);
}

TEST(MuTilde, MatchesDirectSummation) {
  // p = 3 with kappa = 1
  auto P = make_params(2, 3, 2, Truncation::plain);
  P.f.p_satake = {1, 3, 1, 3};
  Distribution dist(P);
  const auto& od = dist.ordinary();
  ASSERT_EQ(od.kappa, 1);
  AsaiCoefficients t(P.f, P.R);
  const long double s = 5, p = 3;
  long double re = 0, im = 0;
  for (int i = 0; i < 4; ++i) {
    long double pr = 0, pi = 0;
    for (long r = P.R; r >= 1; --r) {
      long double ang = 2 * M_PIl * static_cast<long double>(r % 3 * ipow(3, i) % 3) / 3;
      long double w = t.d(r).get_d() / std::pow(static_cast<long double>(r), s);
      pr += w * std::cos(ang);
      pi += w * std::sin(ang);
    }
    long double c = od.B[static_cast<std::size_t>(i)].get_d() * std::pow(p, -i * s);
    re += c * pr;
    im += c * pi;
  }
  long double pref = std::pow(p, s - 1);
  auto v = dist.mu_tilde(1, 1);
  EXPECT_NEAR(v.value.re().to_double(), static_cast<double>(pref * re), 1e-12 * std::abs(static_cast<double>(pref * re)) + v.tail_bound);
  EXPECT_NEAR(v.value.im().to_double(), static_cast<double>(pref * im), 1e-12 * std::abs(static_cast<double>(pref * re)) + v.tail_bound);
}

TEST(MuTilde, TotalMassMatchesTrivialIntegral) {
  for (long p : {3L, 5L}) {
    Distribution dist(make_params(3, p, 3));
    BigComplex total(128);
    for (long a = 1; a < p; ++a) total += dist.mu_tilde(a, 1).value;
    auto expect = dist.interpolation_rhs_corrected(DirichletCharacter::trivial(p));
    EXPECT_LT(distance(total, expect), 1e-25 * std::max(1.0, expect.abs().to_double()));
  }
}

TEST(MuTilde, LinearInCoefficients) {
  auto P = make_params(2, 5, 4, Truncation::plain);
  Distribution base(P);
  auto d = AsaiCoefficients(P.f, P.R).d_table();
  for (auto& x : d) x *= 2;
  Distribution twice(P, d);
  for (long a : {1L, 2L, 7L}) {
    auto u = base.mu_tilde(a, 2).value;
    auto v = twice.mu_tilde(a, 2).value;
    EXPECT_LT(distance(u * BigFloat(2L, 128), v), 1e-25 * std::max(1.0, v.abs().to_double()));
  }
}

TEST(Relation, PassesBothTruncations) {
  for (auto mode : {Truncation::p_complete, Truncation::plain}) {
    Distribution dist(make_params(2, 3, 5, mode));
    for (int j : {1, 2}) {
      for (const auto& rep : dist.verify_all_relations(j)) {
        EXPECT_TRUE(rep.pass);
        if (mode == Truncation::p_complete) EXPECT_LT(rep.gap, 1e-10);
      }
    }
  }
}

TEST(Relation, ExactForD1Only) {
  auto P = make_params(2, 5, 6);
  Distribution dist(P, only_d1(P.R));
  for (long a : {1L, 2L, 3L, 4L}) {
    auto rep = dist.verify_distribution_relation(a, 1);
    EXPECT_LT(rep.gap, 1e-25 * std::max(1.0, rep.rhs.abs().to_double()));
  }
}

TEST(Relation, CorruptedB2Fails) {
  auto P = make_params(2, 5, 7);
  auto od = ordinary_data(P.f);
  od.B[2] += 1;
  Distribution dist(P, std::nullopt, od);
  bool any_fail = false;
  for (const auto& rep : dist.verify_all_relations(1)) any_fail |= !rep.pass;
  EXPECT_TRUE(any_fail);
}

TEST(Integrate, IndependentOfLevel) {
  for (long p : {3L, 5L}) {
    Distribution dist(make_params(2, p, 8));
    for (const auto& chi : enumerate_characters(p)) {
      auto v1 = dist.integrate_character(chi, 1);
      for (int j : {2, 3}) {
        auto vj = dist.integrate_character(chi, j);
        EXPECT_LT(distance(v1, vj), 1e-25 * std::max(1.0, v1.abs().to_double()));
      }
    }
  }
}

TEST(Integrate, Symmetrized) {
  Distribution dist(make_params(3, 5, 9));
  for (const auto& chi : enumerate_characters(25)) {
    int j = 2;
    auto tilde = dist.integrate_character(chi, j);
    auto sym = dist.integrate_character(chi, j, true);
    double scale = std::max(1.0, tilde.abs().to_double());
    if (chi.is_even())
      EXPECT_LT(distance(sym, tilde * BigFloat(2L, 128)), 1e-25 * scale);
    else
      EXPECT_LT(sym.abs().to_double(), 1e-25 * scale);
  }
  auto a = dist.mu_symmetrized(3, 2).value;
  auto b = dist.mu_symmetrized(-3, 2).value;
  EXPECT_LT(distance(a, b), 1e-30 * std::max(1.0, a.abs().to_double()));
}

TEST(Interpolation, NontrivialCharactersAgree) {
  for (long p : {3L, 5L}) {
    Distribution dist(make_params(2, p, 10));
    for (long M : {p, p * p}) {
      for (const auto& chi : enumerate_characters(M)) {
        if (chi.is_trivial() || conductor(chi) != M) continue;
        int j = M == p ? 1 : 2;
        auto lhs = dist.integrate_character(chi, j);
        auto rhs = dist.interpolation_rhs(chi);
        EXPECT_LT(distance(lhs, rhs), 1e-20 * std::max(1.0, rhs.abs().to_double())) << p << " " << M;
      }
    }
  }
}

// For the trivial character the coset sum carries the extra factor
// (1 - p^{s-1}/kappa) / (1 - kappa p^{-s}); the bare formula does not hold.
TEST(Interpolation, TrivialCharacter) {
  Distribution dist(make_params(2, 5, 11));
  auto triv = DirichletCharacter::trivial(5);
  auto lhs = dist.integrate_character(triv, 1);
  EXPECT_LT(distance(lhs, dist.interpolation_rhs_corrected(triv)), 1e-20 * std::max(1.0, lhs.abs().to_double()));
  EXPECT_GT(distance(lhs, dist.interpolation_rhs(triv)), 1e-3 * std::max(1.0, lhs.abs().to_double()));
}

TEST(Interpolation, PDeprivedCrossCheck) {
  auto P = make_params(2, 5, 12);
  Distribution dist(P);
  AsaiCoefficients t(P.f, P.R);
  // sum_{r <= R} d(r) r^{-s} times F(p^{-s})
  long double full = 0;
  for (long r = P.R; r >= 1; --r) full += t.d(r).get_d() / std::pow(static_cast<long double>(r), 5.0L);
  const auto& F = dist.ordinary().F;
  long double X = std::pow(5.0L, -5.0L), Fx = 0, Xe = 1;
  for (const auto& c : F) {
    Fx += c.get_d() * Xe;
    Xe *= X;
  }
  auto g = dist.twisted_asai(DirichletCharacter::trivial(5));
  EXPECT_NEAR(g.re().to_double(), static_cast<double>(full * Fx), 1e-12);
}

TEST(Interpolation, D1OnlyEigenform) {
  auto P = make_params(2, 5, 13);
  Distribution dist(P, only_d1(P.R));
  for (const auto& chi : enumerate_characters(25)) {
    if (conductor(chi) != 25) continue;
    auto rhs = dist.interpolation_rhs(chi);
    BigFloat s1 = P.s - BigFloat(1L, 128);
    BigFloat pref = pow(pow(BigFloat(5L, 128), s1), 2L) / pow(BigFloat(dist.ordinary().kappa, 128), 2L);
    auto expect = embed_complex(gauss_sum(chi).value, 128) * pref;
    EXPECT_LT(distance(rhs, expect), 1e-25 * expect.abs().to_double());
  }
}
