// Serial reference vs OpenMP kernels: elimination and the per-class analysis loop.
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>

#include <omp.h>

#include "metabel/analysis.hpp"
#include "metabel/knotio.hpp"
#include "metabel/linalg.hpp"

using namespace metabel;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CycloMatrix random_matrix(std::size_t rows, std::size_t cols, long level, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, static_cast<int>(level) - 1), sparse(0, 3);
  CycloMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (sparse(rng) != 0) m(r, c) = Cyclotomic(coef(rng)) * Cyclotomic::root_of_unity(level, expo(rng));
  return unify_level(m);
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << serial << std::setw(10) << parallel << std::setw(9) << std::setprecision(2) << serial / parallel
            << "x  " << (same ? "identical" : "MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t size = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 60;
  std::mt19937 rng(20240611);
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(10) << "serial" << std::setw(10)
            << "parallel" << std::setw(10) << "speedup" << "\n";

  bool all_same = true;
  for (long level : {1L, 5L, 12L}) {
    const CycloMatrix m = random_matrix(size, size + 4, level, rng);
    RowEchelon s, p;
    const double ts = seconds([&] { s = row_reduce(m, Exec::serial); });
    const double tp = seconds([&] { p = row_reduce(m, Exec::parallel); });
    const bool same = s.reduced == p.reduced && s.pivot_cols == p.pivot_cols;
    all_same = all_same && same;
    row("row_reduce " + std::to_string(size) + "x" + std::to_string(size + 4) + " level " + std::to_string(level), ts,
        tp, same);
  }

  struct Case {
    const char* braid;
    int n;
  };
  for (const Case& c : {Case{"1 1 1 2 -1 2", 3}, Case{"1 -2 1 -2", 3}, Case{"1 1 1 1 1", 5}}) {
    const auto pres = braid_to_presentation(parse_braid(c.braid));
    AnalysisOptions serial_opts, parallel_opts;
    serial_opts.exec = Exec::serial;
    AnalysisReport s, p;
    const double ts = seconds([&] { s = analyze(pres, c.braid, c.n, serial_opts); });
    const double tp = seconds([&] { p = analyze(pres, c.braid, c.n, parallel_opts); });
    const bool same = s == p;
    all_same = all_same && same;
    row(std::string("analyze \"") + c.braid + "\" n=" + std::to_string(c.n), ts, tp, same);
  }
  return all_same ? 0 : 1;
}
