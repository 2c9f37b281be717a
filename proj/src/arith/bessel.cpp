#include "pasai/arith/bessel.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <cstdlib>
#include <stdexcept>

namespace pasai {

BesselMomentReport bessel_k_moment_check(int nu, const Rational& mu, const Rational& a, double tol) {
  if (mu <= std::abs(nu)) throw std::domain_error("bessel moment diverges: need mu > |nu|");
  if (a <= 0) throw std::domain_error("bessel moment: a must be positive");
  const double m = mu.get_d();
  const double s = a.get_d();
  const double v = std::abs(nu);
  auto f = [&](double t) {
    const double x = s * t;
    if (t <= 0 || x > 700) return 0.0;
    if (x < 1e-100) {
      // K_0(x) ~ -log(x/2) - gamma, K_v(x) ~ Gamma(v)/2 (2/x)^v
      if (v == 0) return (-std::log(x / 2) - 0.5772156649015329) * std::pow(t, m - 1);
      return 0.5 * std::tgamma(v) * std::exp(v * std::log(2 / s) + (m - 1 - v) * std::log(t));
    }
    return boost::math::cyl_bessel_k(v, x) * std::pow(t, m - 1);
  };
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0;
  double lhs = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), std::sqrt(std::numeric_limits<double>::epsilon()), &err);
  double rhs = std::pow(2.0, m - 2) * std::pow(s, -m) * std::tgamma((m + nu) / 2) * std::tgamma((m - nu) / 2);
  BesselMomentReport r{BigComplex(BigFloat(lhs, 53)), BigComplex(BigFloat(rhs, 53)), 0, false};
  r.rel_error = std::abs(lhs - rhs) / std::abs(rhs);
  r.agree = r.rel_error < tol;
  return r;
}

}  // namespace pasai
