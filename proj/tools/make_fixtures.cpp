// Writes the data/ fixtures: eigenforms, measure tables, gamma tables.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "pasai/arith/numtheory.hpp"
#include "pasai/asai/eigenform.hpp"
#include "pasai/characters/dirichlet.hpp"
#include "pasai/padic/padic.hpp"

using namespace pasai;

namespace {

void write_to(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  body(out);
  std::cout << "wrote " << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regenerate data/ fixtures"};
  std::string dir = "data";
  long bound = 100000;
  unsigned long seed = 20240601;
  app.add_option("--dir", dir, "output directory");
  app.add_option("--bound", bound, "largest prime carrying an eigenvalue");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::create_directories(dir);
  const std::filesystem::path d(dir);
  std::mt19937_64 rng(seed);

  for (long p : {3L, 5L}) {
    auto f = MockEigenform::random(4, 1, 11, p, bound, rng);
    write_to(d / ("eigenform_k4_D11_p" + std::to_string(p) + ".txt"), [&](std::ostream& out) {
      out << "# k N D p, Satake values at p, then: l index c(l)\n";
      write_eigenform(out, f);
    });
  }

  const long p = 3;
  const int n = 4, j = 2;
  auto dirac = dirac_measure_table(p, n, j, 2);
  write_to(d / "measure_dirac_p3.txt", [&](std::ostream& out) { dirac.write(out); });

  MeasureTable random = dirac;
  std::uniform_int_distribution<long> U(-50, 50);
  for (auto& [key, v] : random.entries) v = CyclotomicNumber(1, Rational(U(rng)));
  write_to(d / "measure_random_p3.txt", [&](std::ostream& out) { random.write(out); });

  MeasureTable missing = dirac;
  missing.entries.erase({0, ipow(p, j), 1});
  write_to(d / "measure_missing_p3.txt", [&](std::ostream& out) { missing.write(out); });
  return 0;
}
