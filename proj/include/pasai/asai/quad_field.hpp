#pragma once

namespace pasai {

enum class Splitting { split, inert, ramified };

const char* to_string(Splitting s);
Splitting parse_splitting(const char* tag);

/// F = Q(sqrt(-D)) with -D a fundamental discriminant.
class QuadField {
 public:
  /// Throws std::invalid_argument unless -D is a fundamental discriminant.
  explicit QuadField(long D);

  long D() const { return D_; }
  long discriminant() const { return -D_; }
  /// Decomposition of a rational prime l, from the Kronecker symbol (-D | l).
  Splitting splitting(long l) const;
  /// Number of primes of F above l.
  int ideals_above(long l) const { return splitting(l) == Splitting::split ? 2 : 1; }
  /// Norm of a prime above l: l, or l^2 when inert.
  long ideal_norm(long l) const { return splitting(l) == Splitting::inert ? l * l : l; }

 private:
  long D_;
};

bool is_fundamental_discriminant(long d);

}  // namespace pasai
