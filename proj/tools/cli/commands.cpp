#include "commands.hpp"

#include <fstream>
#include <ostream>

#include "checks.hpp"
#include "pasai/eisenstein/eisenstein.hpp"
#include "pasai/kernels/power_sum.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace pasai::cli {

namespace {

int finish(const std::vector<CheckResult>& results, const RunConfig& cfg, std::ostream& out) {
  print_results(out, results);
  merge_into_cache(cfg.cache_path.empty() ? default_cache_path() : cfg.cache_path, results);
  long failed = 0;
  for (const auto& r : results) failed += r.status == Status::fail;
  out << results.size() << " checks, " << failed << " failed\n";
  return all_pass(results) ? kPass : kCheckFailed;
}

void write_cyclotomic(std::ostream& out, const CyclotomicNumber& c) {
  out << c.order() << ':';
  for (const auto& x : c.coeffs()) out << ' ' << x.get_str();
}

}  // namespace

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out) {
  auto tasks = build_suite(suite, cfg);
  kernels::set_parallelism(cfg.parallelism);
  return finish(run_tasks(tasks, cfg.parallelism), cfg, out);
}

int cmd_eisenstein(const RunConfig& cfg, long T, const std::string& out_path, std::ostream& out) {
  if (cfg.k < 4 || cfg.k % 2 != 0)
    throw UsageError("k must be even and at least 4: odd k gives no Eisenstein series, and k = 2 is the excluded m = n case");
  if (T < 0) throw UsageError("T must be nonnegative");
  if (out_path.empty()) throw UsageError("eisenstein needs --out");
  LevelParams P{cfg.N, cfg.p, cfg.j, cfg.k, 4};
  try {
    P.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  EisensteinSeries E(P);
  QExpansion q = cfg.j == 0 ? E.classical_reduction(T) : E.qexpansion(T);
  std::ofstream file(out_path);
  if (!file) throw UsageError("cannot write " + out_path);
  file << "# N p j k T\n" << P.N << ' ' << P.p << ' ' << P.j << ' ' << P.k << ' ' << T << '\n';
  file << "# c_j\n" << q.c_j << '\n';
  file << "# l order: coefficients in powers of zeta_order\n";
  for (std::size_t l = 0; l < q.coeffs.size(); ++l) {
    file << l << ' ';
    write_cyclotomic(file, q.coeffs[l]);
    file << '\n';
  }
  const bool a0_one = q.coeffs.at(0) == CyclotomicNumber(1, 1);
  out << "a0 = " << q.coeffs[0].to_string() << '\n' << "c_j = " << q.c_j << '\n';
  return a0_one ? kPass : kCheckFailed;
}

int cmd_kummer(const std::string& measure_path, const RunConfig& cfg, int depth, std::ostream& out) {
  cfg.validate();
  if (depth < 1) throw UsageError("--depth must be positive");
  auto tasks = build_kummer_tasks(measure_path, cfg.p, cfg.j, depth, cfg.seed);
  return finish(run_tasks(tasks, cfg.parallelism), cfg, out);
}

int cmd_report(const std::string& cache_path, const std::string& out_path, const std::string& format,
               bool with_runtime, std::ostream& out) {
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  auto results = load_cache(cache_path);
  if (results.empty()) throw UsageError("no cached results in " + cache_path + "; run verify or kummer first");
  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot write " + out_path);
    sink = &file;
  }
  if (format == "csv") write_csv(*sink, results, with_runtime);
  else write_json(*sink, results, with_runtime);
  return kPass;
}

}  // namespace pasai::cli
