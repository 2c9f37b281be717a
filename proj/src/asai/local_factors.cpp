#include "pasai/asai/local_factors.hpp"

#include <stdexcept>

#include "pasai/arith/numtheory.hpp"
#include "pasai/arith/polynomial.hpp"

namespace pasai {

namespace {

QPoly linear(const Rational& a) { return {Rational(1), -a}; }

FormalDirichletSeries<Rational> euler_product(const MockEigenform& f, long R) {
  FormalDirichletSeries<Rational> prod(R, Rational(0));
  prod[1] = 1;
  for (long l = 2; l <= R; ++l) {
    if (!is_prime(l) || f.N % l == 0) continue;
    std::size_t terms = 1;
    for (long q = l; q <= R; q *= l) ++terms;
    auto inv = series_inverse(local_factor_poly(f, l), terms, Rational(0));
    prod = prod * FormalDirichletSeries<Rational>::prime_power_series(l, inv, R, Rational(0));
  }
  return prod;
}

}  // namespace

std::vector<Rational> local_factor_poly(const MockEigenform& f, long l) {
  if (!is_prime(l) || f.N % l == 0) throw std::invalid_argument("local_factor_poly: l must be a prime not dividing N");
  const int k = f.k;
  QPoly out;
  switch (f.field.splitting(l)) {
    case Splitting::split: {
      Rational a = f.eigenvalue(l, 0), b = f.eigenvalue(l, 1);
      Rational A = rational_pow(Rational(l), k - 1), B = A;
      out = {Rational(1), -a * b, a * a * B + b * b * A - 2 * A * B, -a * b * A * B, A * A * B * B};
      break;
    }
    case Splitting::inert: {
      Rational a = f.eigenvalue(l, 0);
      Rational A = rational_pow(Rational(l), 2 * k - 2);
      out = poly_mul({Rational(1), -a, A}, {Rational(1), Rational(0), -A});
      break;
    }
    case Splitting::ramified: {
      Rational a = f.eigenvalue(l, 0);
      Rational A = rational_pow(Rational(l), k - 1);
      out = poly_mul({Rational(1), -(a * a - 2 * A), A * A}, linear(A));
      break;
    }
  }
  out.resize(5, 0);
  return out;
}

std::vector<CyclotomicNumber> local_asai_factor(const MockEigenform& f, long l, const DirichletCharacter& chi) {
  if (f.N % l == 0) throw std::invalid_argument("local_asai_factor: l must not divide N");
  if (chi.exponent(l) < 0) {
    std::vector<CyclotomicNumber> one(5, CyclotomicNumber(chi.order()));
    one[0] = CyclotomicNumber(chi.order(), 1);
    return one;
  }
  if (l == f.p) throw std::invalid_argument("local_asai_factor: l = p with chi(p) != 0");
  auto base = local_factor_poly(f, l);
  CyclotomicNumber x = chi.value(l);
  CyclotomicNumber xi(chi.order(), 1);
  std::vector<CyclotomicNumber> out;
  for (const auto& c : base) {
    out.push_back(xi * c);
    xi = xi * x;
  }
  return out;
}

EulerCheckReport euler_vs_coefficients(const MockEigenform& f, long R) {
  AsaiCoefficients coeffs(f, R);
  return euler_vs_series(f, coeffs.d_series());
}

EulerCheckReport euler_vs_series(const MockEigenform& f, const FormalDirichletSeries<Rational>& d) {
  const long R = d.bound();
  auto prod = euler_product(f, R);
  EulerCheckReport rep;
  rep.bound = R;
  for (long r = 1; r <= R; ++r) {
    if (std::gcd(r, f.N) != 1) continue;
    if (prod[r] != d[r]) {
      rep.ok = false;
      rep.first_mismatch = r;
      break;
    }
  }
  return rep;
}

EulerCheckReport euler_vs_coefficients_twisted(const MockEigenform& f, long R, const DirichletCharacter& chi) {
  AsaiCoefficients coeffs(f, R);
  const CyclotomicNumber zero(chi.order());
  FormalDirichletSeries<CyclotomicNumber> prod(R, zero);
  prod[1] = CyclotomicNumber(chi.order(), 1);
  for (long l = 2; l <= R; ++l) {
    if (!is_prime(l) || f.N % l == 0) continue;
    if (chi.exponent(l) < 0) continue;
    std::vector<CyclotomicNumber> poly;
    if (l == f.p) {
      CyclotomicNumber x = chi.value(l), xi(chi.order(), 1);
      for (const auto& c : local_factor_poly(f, l)) {
        poly.push_back(xi * c);
        xi = xi * x;
      }
    } else {
      poly = local_asai_factor(f, l, chi);
    }
    std::size_t terms = 1;
    for (long q = l; q <= R; q *= l) ++terms;
    auto inv = series_inverse(poly, terms, zero);
    prod = prod * FormalDirichletSeries<CyclotomicNumber>::prime_power_series(l, inv, R, zero);
  }
  EulerCheckReport rep;
  rep.bound = R;
  for (long r = 1; r <= R; ++r) {
    if (std::gcd(r, f.N) != 1) continue;
    CyclotomicNumber expect = chi.value(r) * coeffs.d(r);
    if (prod[r] != expect) {
      rep.ok = false;
      rep.first_mismatch = r;
      break;
    }
  }
  return rep;
}

OrdinaryData ordinary_data(const MockEigenform& f) {
  f.validate();
  const auto& s = f.p_satake;
  for (int swap_p = 0; swap_p < 2; ++swap_p) {
    for (int swap_q = 0; swap_q < 2; ++swap_q) {
      Rational a1 = s[swap_p ? 1 : 0], a2 = s[swap_p ? 0 : 1];
      Rational b1 = s[swap_q ? 3 : 2], b2 = s[swap_q ? 2 : 3];
      Rational kappa = a1 * b1;
      if (kappa == 0 || valuation(kappa, static_cast<unsigned long>(f.p)) != 0) continue;
      OrdinaryData od;
      od.kappa = kappa;
      od.alphas = {a1, a2, b1, b2};
      od.H = poly_mul(poly_mul(linear(a1 * b2), linear(a2 * b1)), linear(a2 * b2));
      od.F = poly_mul(linear(kappa), od.H);
      od.H.resize(4, 0);
      od.F.resize(5, 0);
      for (std::size_t i = 0; i < 4; ++i) od.B[i] = od.H[i];
      if (poly_sub(od.F, poly_mul(linear(kappa), od.H)) != QPoly{}) throw std::logic_error("ordinary_data: F != (1 - kappa X) H");
      return od;
    }
  }
  throw std::domain_error("ordinary_data: f is not totally ordinary at p");
}

std::vector<Rational> inverse_F_coefficients(const OrdinaryData& od, std::size_t terms) {
  return series_inverse(od.F, terms, Rational(0));
}

}  // namespace pasai
