#include "pasai/arith/rational.hpp"

#include <stdexcept>

namespace pasai {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!is_int(num) || !is_int(den)) throw std::invalid_argument("malformed rational: " + s);
  BigInt n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rational_pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("zero to a negative power");
    return rational_pow(Rational(1) / q, -e);
  }
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

long valuation(const BigInt& z, unsigned long p) {
  if (z == 0) throw std::domain_error("valuation of zero");
  BigInt tmp;
  return static_cast<long>(mpz_remove(tmp.get_mpz_t(), z.get_mpz_t(), BigInt(p).get_mpz_t()));
}

long valuation(const Rational& q, unsigned long p) {
  if (q == 0) throw std::domain_error("valuation of zero");
  return valuation(BigInt(q.get_num()), p) - valuation(BigInt(q.get_den()), p);
}

}  // namespace pasai
