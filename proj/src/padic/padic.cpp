#include "pasai/padic/padic.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"

namespace pasai {

const Rational& PadicCycValue::valuation() const {
  if (!v_) v_ = padic_valuation(element_, p_);
  return *v_;
}

bool PadicCycValue::at_least(const Rational& bound) const { return is_zero() || valuation() >= bound; }

namespace {

bool at_least(const CyclotomicNumber& x, long p, const Rational& bound) {
  return x.is_zero() || padic_valuation(x, p) >= bound;
}

CyclotomicNumber chi_inverse_at(const DirichletCharacter& chi, long a) {
  long e = chi.exponent(a);
  if (e < 0) return CyclotomicNumber(1);
  return CyclotomicNumber::zeta(chi.order(), -e);
}

CyclotomicNumber chi_at(const DirichletCharacter& chi, long a) {
  long e = chi.exponent(a);
  if (e < 0) return CyclotomicNumber(1);
  return CyclotomicNumber::zeta(chi.order(), e);
}

std::vector<long> sample_units(long p, int level) {
  long mod = ipow(p, level);
  std::vector<long> ys;
  for (long y = 1; y < mod || (mod == 1 && y == 1); ++y)
    if (y % p != 0) ys.push_back(y);
  return ys;
}

}  // namespace

KummerReport kummer_check(const CharacterTable& table, long p, int j, long a) {
  if (j < 1) throw std::invalid_argument("kummer_check: j must be positive");
  const long pj = ipow(p, j);
  if (std::gcd(a, p) != 1) throw std::invalid_argument("kummer_check: a must be a unit");
  std::set<std::vector<long>> seen;
  for (const auto& [chi, v] : table) {
    if (chi.modulus() != pj) throw std::invalid_argument("kummer_check: character of the wrong modulus");
    std::vector<long> key = chi.exponents();
    key.push_back(chi.order());
    seen.insert(std::move(key));
  }
  if (static_cast<long>(seen.size()) != euler_phi(pj) || table.size() != seen.size())
    throw std::invalid_argument("kummer_check: table must list every character mod p^j once");
  KummerReport rep;
  rep.a = a;
  rep.j = j;
  rep.required = j - 1;
  rep.sum = CyclotomicNumber(1);
  for (const auto& [chi, v] : table) rep.sum += chi_inverse_at(chi, a) * v;
  if (!rep.sum.is_zero()) rep.valuation = padic_valuation(rep.sum, p);
  rep.pass = !rep.valuation || *rep.valuation >= Rational(rep.required);
  return rep;
}

std::string to_string(AkcStatus s) {
  switch (s) {
    case AkcStatus::pass: return "pass";
    case AkcStatus::fail: return "fail";
    default: return "hypothesis not satisfied";
  }
}

AkcReport akc_check(const std::vector<AkcFunction>& functions, const std::vector<CyclotomicNumber>& targets, long p,
                    int level, int depth) {
  if (functions.size() != targets.size()) throw std::invalid_argument("akc_check: size mismatch");
  AkcReport rep;
  const Rational bound(level);
  bool all_zero = true;
  for (const auto& fn : functions) all_zero = all_zero && fn.weight.is_zero();
  if (all_zero) {
    rep.note = "vacuous: all weights zero";
    return rep;
  }
  for (long y : sample_units(p, level + depth)) {
    ++rep.samples;
    CyclotomicNumber s(1);
    for (const auto& fn : functions)
      if (!fn.weight.is_zero()) s += fn.weight * fn.f(y);
    if (!at_least(s, p, bound)) {
      rep.status = AkcStatus::hypothesis_not_satisfied;
      rep.counterexample = y;
      return rep;
    }
  }
  CyclotomicNumber total(1);
  for (std::size_t i = 0; i < functions.size(); ++i) total += functions[i].weight * targets[i];
  if (!total.is_zero()) rep.conclusion_valuation = padic_valuation(total, p);
  rep.status = at_least(total, p, bound) ? AkcStatus::pass : AkcStatus::fail;
  return rep;
}

const CyclotomicNumber* MeasureTable::find(int m, long modulus, long index) const {
  auto it = entries.find({m, modulus, index});
  return it == entries.end() ? nullptr : &it->second;
}

CyclotomicNumber MeasureTable::a(int m, long modulus, long index) const {
  const CyclotomicNumber* v = find(m, modulus, index);
  if (!v) throw std::invalid_argument("MeasureTable: missing entry");
  return (m / 2) % 2 ? -*v : *v;
}

MeasureTable MeasureTable::parse(std::istream& in) {
  MeasureTable t;
  std::string line;
  bool header = false;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (!header) {
      std::string kappa;
      t.p = std::stol(first);
      if (!(ss >> t.n >> kappa)) throw std::invalid_argument("measure table: bad header");
      t.kappa = parse_rational(kappa);
      header = true;
      continue;
    }
    int m = std::stoi(first);
    long modulus, index, order;
    if (!(ss >> modulus >> index >> order))
      throw std::invalid_argument("measure table: malformed record on line " + std::to_string(lineno));
    std::vector<Rational> coeffs;
    std::string c;
    while (ss >> c) coeffs.push_back(parse_rational(c));
    t.set(m, modulus, index, CyclotomicNumber::from_powers(order, coeffs));
  }
  if (!header) throw std::invalid_argument("measure table: empty input");
  return t;
}

MeasureTable MeasureTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open measure table " + path);
  return parse(in);
}

void MeasureTable::write(std::ostream& out) const {
  out << p << ' ' << n << ' ' << pasai::to_string(kappa) << '\n';
  for (const auto& [key, v] : entries) {
    auto [m, modulus, index] = key;
    out << m << ' ' << modulus << ' ' << index << ' ' << v.order();
    for (const auto& c : v.coeffs()) out << ' ' << pasai::to_string(c);
    out << '\n';
  }
}

MeasureTable dirac_measure_table(long p, int n, int j, long u) {
  if (u % p == 0) throw std::invalid_argument("dirac_measure_table: u must be a unit");
  MeasureTable t;
  t.p = p;
  t.n = n;
  const long pj = ipow(p, j);
  const auto chars = enumerate_characters(pj);
  for (int m = 0; m <= n; m += 2) {
    Rational um = rational_pow(Rational(u), -m);
    if ((m / 2) % 2) um = -um;
    for (std::size_t i = 0; i < chars.size(); ++i) t.set(m, pj, static_cast<long>(i), chi_at(chars[i], u) * um);
  }
  return t;
}

GlueWeights single_m_weights(long p, int j, int m, long a) {
  const auto chars = enumerate_characters(ipow(p, j));
  GlueWeights w;
  for (std::size_t i = 0; i < chars.size(); ++i) w[{m, static_cast<long>(i)}] = chi_inverse_at(chars[i], a);
  return w;
}

GlueReport glue_check(const MeasureTable& table, int j, const std::vector<GlueWeights>& families, int depth) {
  const long p = table.p;
  const long pj = ipow(p, j);
  const auto chars = enumerate_characters(pj);
  for (int m = 0; m <= table.n - 2; m += 2)
    for (std::size_t i = 0; i < chars.size(); ++i)
      if (!table.find(m, pj, static_cast<long>(i))) throw std::invalid_argument("glue_check: incomplete table");
  GlueReport rep;
  rep.j = j;
  for (const auto& w : families) {
    std::vector<AkcFunction> fns;
    std::vector<CyclotomicNumber> targets;
    for (const auto& [key, b] : w) {
      auto [m, idx] = key;
      if (idx < 0 || idx >= static_cast<long>(chars.size())) throw std::invalid_argument("glue_check: bad index");
      const DirichletCharacter& chi = chars[static_cast<std::size_t>(idx)];
      fns.push_back({b, [chi, m = m](long y) {
                       return chi_at(chi, y) * rational_pow(Rational(y), -m);
                     }});
      targets.push_back(table.a(m, pj, idx));
    }
    AkcReport r = akc_check(fns, targets, p, j - 1, depth);
    if (r.status == AkcStatus::fail) ++rep.failures;
    if (r.status == AkcStatus::hypothesis_not_satisfied) ++rep.skipped;
    rep.families.push_back(std::move(r));
  }
  rep.pass = rep.failures == 0;
  return rep;
}

bool integrality_bound_check(const PadicCycValue& value, int n, int m, int j_chi, long c_j) {
  return value.at_least(Rational(-(static_cast<long>(j_chi) * (4 * n - 3 * m + 3) + c_j)));
}

std::map<std::pair<long, long>, CyclotomicNumber> mellin_table(const MeasureTable& table) {
  std::map<std::pair<long, long>, CyclotomicNumber> out;
  for (const auto& [key, v] : table.entries) {
    auto [m, modulus, index] = key;
    if (m == 0) out.emplace(std::make_pair(modulus, index), v);
  }
  return out;
}

}  // namespace pasai
