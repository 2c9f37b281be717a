#pragma once

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pasai/arith/cyclotomic.hpp"
#include "pasai/arith/valuation.hpp"
#include "pasai/characters/dirichlet.hpp"

namespace pasai {

/// Element of Q(zeta_m) with its p-adic valuation computed on demand.
class PadicCycValue {
 public:
  PadicCycValue(CyclotomicNumber element, long p) : element_(std::move(element)), p_(p) {}

  const CyclotomicNumber& element() const { return element_; }
  long p() const { return p_; }
  bool is_zero() const { return element_.is_zero(); }
  /// Throws std::domain_error for zero.
  const Rational& valuation() const;
  /// v >= bound, with zero counting as +infinity.
  bool at_least(const Rational& bound) const;

 private:
  CyclotomicNumber element_;
  long p_;
  mutable std::optional<Rational> v_;
};

using CharacterTable = std::vector<std::pair<DirichletCharacter, CyclotomicNumber>>;

struct KummerReport {
  long a = 1;
  int j = 1;
  CyclotomicNumber sum;
  std::optional<Rational> valuation;  // empty when the sum vanishes
  long required = 0;                  // j - 1
  bool pass = false;
};

/// sum_chi chi^{-1}(a) value_chi over all characters mod p^j, tested against p^{j-1}.
/// Throws std::invalid_argument if the table does not list each character mod p^j once.
KummerReport kummer_check(const CharacterTable& table, long p, int j, long a);

enum class AkcStatus { pass, fail, hypothesis_not_satisfied };
std::string to_string(AkcStatus s);

struct AkcFunction {
  CyclotomicNumber weight;
  std::function<CyclotomicNumber(long)> f;
};

struct AkcReport {
  AkcStatus status = AkcStatus::pass;
  long samples = 0;
  std::optional<long> counterexample;      // y where the hypothesis fails
  std::optional<Rational> conclusion_valuation;
  std::string note = "finite-level evidence";
};

/// Checks sum b_i f_i(y) in p^level O_p for the units y mod p^{level + depth}; when that holds,
/// tests sum b_i a_i in p^level O_p.
AkcReport akc_check(const std::vector<AkcFunction>& functions, const std::vector<CyclotomicNumber>& targets,
                    long p, int level, int depth = 2);

/// mu°_{2n-m+2}(chi) indexed by (m, modulus p^j, index in enumerate_characters(p^j)).
struct MeasureTable {
  long p = 3;
  int n = 2;
  Rational kappa{1};
  std::map<std::tuple<int, long, long>, CyclotomicNumber> entries;

  void set(int m, long modulus, long index, CyclotomicNumber value) {
    entries[{m, modulus, index}] = std::move(value);
  }
  const CyclotomicNumber* find(int m, long modulus, long index) const;
  /// a_{m,chi} = (-1)^{m/2} mu°_{2n-m+2}(chi).
  CyclotomicNumber a(int m, long modulus, long index) const;

  /// Header "p n kappa", then records "m modulus index order c_0 c_1 ...".
  static MeasureTable parse(std::istream& in);
  static MeasureTable load(const std::string& path);
  void write(std::ostream& out) const;
};

/// Entries (-1)^{m/2} u^{-m} chi(u): the point mass at u, for every even m <= n and chi mod p^j.
MeasureTable dirac_measure_table(long p, int n, int j, long u);

/// b_{(m, index)} weights for one family.
using GlueWeights = std::map<std::pair<int, long>, CyclotomicNumber>;

/// b_{m', chi} = chi^{-1}(a) if m' = m, else 0.
GlueWeights single_m_weights(long p, int j, int m, long a);

struct GlueReport {
  int j = 1;
  std::vector<AkcReport> families;
  long failures = 0;
  long skipped = 0;  // hypothesis not satisfied on the sample
  bool pass = false;
};

/// Mixed-family congruences sum_{m,chi} b_{m,chi} (x_p^{-m} chi)(y) in p^{j-1} O_p implies
/// sum b_{m,chi} a_{m,chi} in p^{j-1} O_p. Throws std::invalid_argument when entries for even
/// m <= n - 2 and characters mod p^j are missing.
GlueReport glue_check(const MeasureTable& table, int j, const std::vector<GlueWeights>& families, int depth = 2);

/// v(value) >= -(j_chi (4n - 3m + 3) + c_j).
bool integrality_bound_check(const PadicCycValue& value, int n, int m, int j_chi, long c_j);

/// L_p(chi) = entry(0, chi) for every character present at m = 0, keyed by (modulus, index).
std::map<std::pair<long, long>, CyclotomicNumber> mellin_table(const MeasureTable& table);

}  // namespace pasai
