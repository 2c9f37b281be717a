#include "pasai/distribution/distribution.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pasai/arith/numtheory.hpp"
#include "pasai/kernels/power_sum.hpp"

namespace pasai {

namespace {

constexpr std::size_t kPTerms = 48;

BigComplex real(const BigFloat& x) { return BigComplex(x, BigFloat(0L, x.precision())); }

int p_exponent(long C, long p) {
  int j = 0;
  for (; C > 1; C /= p) {
    if (C % p != 0) throw std::invalid_argument("character conductor is not a power of p");
    ++j;
  }
  return j;
}

}  // namespace

Distribution::Distribution(DistParams params, std::optional<std::vector<Rational>> d_override, std::optional<OrdinaryData> od_override)
    : params_(std::move(params)), X_(params_.prec), invF_(params_.prec) {
  const auto& f = params_.f;
  const long prec = params_.prec;
  const long p = f.p;
  if (params_.s <= BigFloat(static_cast<long>(f.k + 1), prec)) throw std::domain_error("Distribution: s must exceed k + 1");
  if (params_.R < p * p) throw std::invalid_argument("Distribution: R must be at least p^2");
  if (prec < 64) throw std::invalid_argument("Distribution: prec must be at least 64");
  od_ = od_override ? *od_override : ordinary_data(f);
  if (d_override) {
    if (static_cast<long>(d_override->size()) != params_.R + 1) throw std::invalid_argument("Distribution: d table must have R + 1 entries");
    d_ = std::move(*d_override);
  } else {
    d_ = AsaiCoefficients(f, params_.R).d_table();
  }

  BigFloat s(params_.s);
  X_ = pow(BigFloat(p, prec), -s);
  auto dp = series_inverse(od_.F, kPTerms, Rational(0));
  BigFloat Fx(0L, prec), Xe(1L, prec);
  for (const auto& c : od_.F) {
    Fx += BigFloat(c, prec) * Xe;
    Xe *= X_;
  }
  invF_ = BigFloat(1L, prec) / Fx;
  Xe = BigFloat(1L, prec);
  double pmass = 0;
  for (const auto& c : dp) {
    dpX_.push_back(BigFloat(c, prec) * Xe);
    pmass += std::abs(dpX_.back().to_double());
    Xe *= X_;
  }

  const double sd = s.to_double();
  double A = 0, Acop = 0;
  for (long r = 1; r <= params_.R; ++r) {
    double v = std::abs(d_[static_cast<std::size_t>(r)].get_d()) / std::pow(static_cast<double>(r), f.k);
    A = std::max(A, v);
    if (r % p != 0) Acop = std::max(Acop, v);
  }
  double tail = std::pow(static_cast<double>(params_.R), f.k + 1 - sd) / (sd - f.k - 1);
  plain_tail_ = A * tail;
  coprime_tail_ = Acop * tail * pmass;
}

const Distribution::Level& Distribution::level(int j) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = levels_.find(j);
  if (it != levels_.end()) return *it->second;
  const long p = params_.f.p;
  const long pj = ipow(p, j);
  const long prec = params_.prec;
  auto L = std::make_shared<Level>();
  for (long u = 0; u < pj; ++u) L->roots.push_back(BigComplex::unit_root(u, pj, prec));

  kernels::PowerSumTask task;
  task.buckets = static_cast<int>(pj);
  task.weights = d_;
  task.s = real(params_.s);
  task.prec = prec;
  task.bucket.assign(static_cast<std::size_t>(params_.R) + 1, -1);
  for (long r = 1; r <= params_.R; ++r)
    if (r % p != 0) task.bucket[static_cast<std::size_t>(r)] = static_cast<int>(r % pj);
  L->coprime = kernels::bucketed_power_sum(task);
  if (params_.mode == Truncation::plain) {
    for (long r = 1; r <= params_.R; ++r) task.bucket[static_cast<std::size_t>(r)] = static_cast<int>(r % pj);
    L->all = kernels::bucketed_power_sum(task);
  }
  auto& slot = levels_[j];
  slot = std::move(L);
  return *slot;
}

BigComplex Distribution::P_s(const Rational& b) const {
  const long prec = params_.prec;
  const long den = b.get_den().get_si();
  const long num = mod_floor(BigInt(b.get_num() % den).get_si(), den);
  kernels::PowerSumTask task;
  task.buckets = static_cast<int>(den);
  task.weights = d_;
  task.s = real(params_.s);
  task.prec = prec;
  task.bucket.assign(static_cast<std::size_t>(params_.R) + 1, -1);
  for (long r = 1; r <= params_.R; ++r) task.bucket[static_cast<std::size_t>(r)] = static_cast<int>(static_cast<__int128>(r) * num % den);
  auto sums = kernels::bucketed_power_sum(task);
  BigComplex out(prec);
  for (long u = 0; u < den; ++u) out += sums[static_cast<std::size_t>(u)] * BigComplex::unit_root(u, den, prec);
  return out;
}

BigComplex Distribution::P_level(long a, int i, int j) const {
  const long p = params_.f.p;
  const long pj = ipow(p, j);
  const long prec = params_.prec;
  const Level& L = level(j);
  if (params_.mode == Truncation::plain) {
    BigComplex out(prec);
    long step = mod_floor(a * (i >= j ? 0 : ipow(p, i)), pj);
    for (long u = 0; u < pj; ++u) out += L.all[static_cast<std::size_t>(u)] * L.roots[static_cast<std::size_t>(u * step % pj)];
    return out;
  }
  BigComplex total(prec);
  for (const auto& v : L.coprime) total += v;
  const int E = j - i;
  if (E <= 0) return total * invF_;
  BigComplex out(prec);
  BigFloat tailE = invF_;
  for (int e = 0; e < E; ++e) {
    long step = mod_floor(a * ipow(p, e + i), pj);
    BigComplex S(prec);
    for (long t = 0; t < pj; ++t) {
      if (t % p == 0) continue;
      S += L.coprime[static_cast<std::size_t>(t)] * L.roots[static_cast<std::size_t>(t * step % pj)];
    }
    out += S * dpX_[static_cast<std::size_t>(e)];
    tailE -= dpX_[static_cast<std::size_t>(e)];
  }
  out += total * tailE;
  return out;
}

double Distribution::coset_tail_bound(int j) const {
  const long prec = params_.prec;
  BigFloat pref = pow(pow(BigFloat(params_.f.p, prec), params_.s - BigFloat(1L, prec)), static_cast<long>(j)) /
                  pow(BigFloat(od_.kappa, prec), static_cast<long>(j));
  double bsum = 0, Xi = 1, X = X_.to_double();
  for (const auto& B : od_.B) {
    bsum += std::abs(B.get_d()) * Xi;
    Xi *= X;
  }
  double t = params_.mode == Truncation::plain ? plain_tail_ : coprime_tail_;
  return std::abs(pref.to_double()) * bsum * t;
}

CosetValue Distribution::mu_tilde(long a, int j) const {
  const long p = params_.f.p;
  if (j < 1) throw std::invalid_argument("mu_tilde: j >= 1");
  if (mod_floor(a, p) == 0) throw std::invalid_argument("mu_tilde: a must be a unit");
  const long prec = params_.prec;
  const long pj = ipow(p, j);
  BigFloat pref = pow(pow(BigFloat(p, prec), params_.s - BigFloat(1L, prec)), static_cast<long>(j)) /
                  pow(BigFloat(od_.kappa, prec), static_cast<long>(j));
  BigComplex acc(prec);
  BigFloat Xi(1L, prec);
  for (int i = 0; i < 4; ++i) {
    acc += P_level(mod_floor(a, pj), i, j) * (BigFloat(od_.B[static_cast<std::size_t>(i)], prec) * Xi);
    Xi *= X_;
  }
  return {mod_floor(a, pj), j, acc * pref, coset_tail_bound(j)};
}

CosetValue Distribution::mu_symmetrized(long a, int j) const {
  CosetValue plus = mu_tilde(a, j);
  CosetValue minus = mu_tilde(-a, j);
  plus.value += minus.value;
  plus.tail_bound += minus.tail_bound;
  return plus;
}

RelationReport Distribution::verify_distribution_relation(long a, int j) const {
  const long p = params_.f.p;
  const long pj = ipow(p, j);
  RelationReport rep;
  rep.lhs = BigComplex(params_.prec);
  double tails = 0;
  for (long t = 0; t < p; ++t) {
    CosetValue v = mu_tilde(mod_floor(a, pj) + t * pj, j + 1);
    rep.lhs += v.value;
    tails += v.tail_bound;
  }
  CosetValue r = mu_tilde(a, j);
  rep.rhs = r.value;
  tails += r.tail_bound;
  rep.gap = distance(rep.lhs, rep.rhs);
  double scale = std::max({1.0, rep.lhs.abs().to_double(), rep.rhs.abs().to_double()});
  rep.allowed = tails + std::ldexp(scale, static_cast<int>(-params_.prec + 32));
  rep.pass = rep.gap <= rep.allowed;
  return rep;
}

std::vector<RelationReport> Distribution::verify_all_relations(int j) const {
  const long p = params_.f.p;
  const long pj = ipow(p, j);
  level(j);
  level(j + 1);
  std::vector<long> units;
  for (long a = 1; a < pj; ++a)
    if (a % p != 0) units.push_back(a);
  std::vector<RelationReport> out(units.size());
#pragma omp parallel for schedule(dynamic) num_threads(kernels::parallelism())
  for (long i = 0; i < static_cast<long>(units.size()); ++i)
    out[static_cast<std::size_t>(i)] = verify_distribution_relation(units[static_cast<std::size_t>(i)], j);
  return out;
}

CyclotomicNumber Distribution::primitive_value(const DirichletCharacter& prim, long a) const {
  if (mod_floor(a, params_.f.p) == 0) return CyclotomicNumber(prim.order());
  return prim.value(a);
}

BigComplex Distribution::integrate_character(const DirichletCharacter& chi, int j, bool symmetrized) const {
  const long p = params_.f.p;
  DirichletCharacter prim = primitive_character(chi);
  if (p_exponent(prim.modulus(), p) > j) throw std::invalid_argument("integrate_character: j < j_chi");
  const long pj = ipow(p, j);
  const long prec = params_.prec;
  std::vector<BigComplex> roots;
  for (long e = 0; e < prim.order(); ++e) roots.push_back(BigComplex::unit_root(e, prim.order(), prec));
  BigComplex out(prec);
  for (long a = 1; a < pj; ++a) {
    if (a % p == 0) continue;
    long e = prim.exponent(a);
    CosetValue v = symmetrized ? mu_symmetrized(a, j) : mu_tilde(a, j);
    out += v.value * roots[static_cast<std::size_t>(e)];
  }
  return out;
}

BigComplex Distribution::twisted_asai(const DirichletCharacter& chi) const {
  const long p = params_.f.p;
  DirichletCharacter prim = primitive_character(chi);
  const int J = std::max(1, p_exponent(prim.modulus(), p));
  const long pj = ipow(p, J);
  const long prec = params_.prec;
  const Level& L = level(J);
  BigComplex out(prec);
  for (long t = 1; t < pj; ++t) {
    if (t % p == 0) continue;
    long e = prim.exponent(t);
    out += L.coprime[static_cast<std::size_t>(t)] * BigComplex::unit_root(e, prim.order(), prec);
  }
  return out;
}

BigComplex Distribution::interpolation_rhs(const DirichletCharacter& chi) const {
  const long p = params_.f.p;
  const long prec = params_.prec;
  DirichletCharacter prim = primitive_character(chi);
  const int jchi = p_exponent(prim.modulus(), p);
  BigFloat pref = pow(pow(BigFloat(p, prec), params_.s - BigFloat(1L, prec)), static_cast<long>(jchi)) /
                  pow(BigFloat(od_.kappa, prec), static_cast<long>(jchi));
  BigComplex G = embed_complex(gauss_sum(prim).value, prec);
  return G * twisted_asai(prim.conj()) * pref;
}

BigComplex Distribution::interpolation_rhs_corrected(const DirichletCharacter& chi) const {
  DirichletCharacter prim = primitive_character(chi);
  if (!prim.is_trivial()) return interpolation_rhs(chi);
  const long prec = params_.prec;
  const long p = params_.f.p;
  BigFloat kappa(od_.kappa, prec);
  BigFloat one(1L, prec);
  BigFloat ps1 = pow(BigFloat(p, prec), params_.s - one);
  BigFloat factor = (one - ps1 / kappa) / (one - kappa * X_);
  return twisted_asai(prim) * factor;
}

}  // namespace pasai
