#include "pasai/asai/quad_field.hpp"

#include <cstring>
#include <string>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"
#include "pasai/arith/rational.hpp"

namespace pasai {

const char* to_string(Splitting s) {
  switch (s) {
    case Splitting::split:
      return "split";
    case Splitting::inert:
      return "inert";
    case Splitting::ramified:
      return "ramified";
  }
  return "?";
}

Splitting parse_splitting(const char* tag) {
  if (std::strcmp(tag, "split") == 0 || std::strcmp(tag, "s") == 0) return Splitting::split;
  if (std::strcmp(tag, "inert") == 0 || std::strcmp(tag, "i") == 0) return Splitting::inert;
  if (std::strcmp(tag, "ramified") == 0 || std::strcmp(tag, "r") == 0) return Splitting::ramified;
  throw std::invalid_argument(std::string("unknown splitting tag: ") + tag);
}

bool is_fundamental_discriminant(long d) {
  if (d == 0 || d == 1) return false;
  long m = mod_floor(d, 4);
  auto squarefree = [](long n) {
    n = n < 0 ? -n : n;
    for (auto [q, e] : factorize(n))
      if (e > 1) return false;
    return true;
  };
  if (m == 1) return squarefree(d);
  if (m == 0) {
    long e = d / 4;
    long r = mod_floor(e, 4);
    return (r == 2 || r == 3) && squarefree(e);
  }
  return false;
}

QuadField::QuadField(long D) : D_(D) {
  if (D <= 0 || !is_fundamental_discriminant(-D)) throw std::invalid_argument("QuadField: -D must be a fundamental discriminant");
}

Splitting QuadField::splitting(long l) const {
  if (!is_prime(l)) throw std::invalid_argument("splitting: l must be prime");
  int k = kronecker(-D_, l);
  if (k == 0) return Splitting::ramified;
  return k == 1 ? Splitting::split : Splitting::inert;
}

}  // namespace pasai
