#include <CLI11.hpp>

#include <iostream>

#include "cli/commands.hpp"
#include "cli/suites.hpp"

using namespace pasai::cli;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "odd prime");
  cmd->add_option("--j", cfg.j, "level exponent");
  cmd->add_option("--k", cfg.k, "weight");
  cmd->add_option("--N", cfg.N, "tame level");
  cmd->add_option("--s", cfg.s, "evaluation point, e.g. k+3 or 15/2");
  cmd->add_option("--R", cfg.R, "series truncation");
  cmd->add_option("--prec", cfg.precision_bits, "MPFR precision in bits (env PASAI_PRECISION)");
  cmd->add_option("--tol", cfg.tolerance_exp, "pass iff gap < 10^-tol");
  cmd->add_option("--seed", cfg.seed, "RNG seed");
  cmd->add_option("--parallelism", cfg.parallelism, "worker threads, 0 for the OpenMP default");
  cmd->add_option("--eigenform", cfg.eigenform_path, "eigenform file");
  cmd->add_option("--gamma-table", cfg.gamma_table_path, "gamma coefficient table");
  cmd->add_option("--measure", cfg.measure_path, "measure table");
  cmd->add_option("--cache", cfg.cache_path, "result cache (env PASAI_CACHE)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pasai: checks for p-adic Asai L-function machinery"};
  app.require_subcommand(1);
  RunConfig cfg;
  try {
    cfg.precision_bits = default_precision();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember([] {
        auto names = suite_names();
        names.push_back("all");
        return names;
      }()));
  add_common(verify, cfg);

  long T = 10;
  std::string out_path, format = "csv";
  auto* eis = app.add_subcommand("eisenstein", "write an Eisenstein q-expansion");
  add_common(eis, cfg);
  eis->add_option("--T", T, "last coefficient");
  eis->add_option("--out", out_path, "output file")->required();

  std::string measure;
  int depth = 2;
  auto* kummer = app.add_subcommand("kummer", "Kummer congruence sweep over a measure table");
  kummer->add_option("measure_file", measure, "measure table")->required();
  add_common(kummer, cfg);
  kummer->add_option("--depth", depth, "extra p-adic digits sampled");

  bool no_runtime = false;
  auto* report = app.add_subcommand("report", "consolidated report from cached runs");
  report->add_option("--out", out_path, "output file (stdout when absent)");
  report->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  report->add_option("--cache", cfg.cache_path, "result cache (env PASAI_CACHE)");
  report->add_flag("--omit-runtime", no_runtime, "drop the runtime column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, cfg, std::cout);
    if (*eis) return cmd_eisenstein(cfg, T, out_path, std::cout);
    if (*kummer) return cmd_kummer(measure, cfg, depth, std::cout);
    const std::string cache = cfg.cache_path.empty() ? default_cache_path() : cfg.cache_path;
    return cmd_report(cache, out_path, format, !no_runtime, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
