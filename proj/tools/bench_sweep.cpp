// Timing comparison of the serial and OpenMP sweep paths on a dense
// parameter grid, with a row-by-row equality check between the two.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "zdecomp/batch.hpp"

using namespace zdecomp;

namespace {

std::vector<double> axis(int count, double lo, double hi) {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i)
    v[i] = lo + (hi - lo) * (count == 1 ? 0.0 : double(i) / (count - 1));
  return v;
}

double seconds_for(const SweepSpec& spec, ExecutionMode mode,
                   std::vector<SweepRow>& rows) {
  const auto t0 = std::chrono::steady_clock::now();
  rows = run_sweep(spec, mode);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool rows_equal(const std::vector<SweepRow>& a, const std::vector<SweepRow>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].ok != b[i].ok || a[i].locally_symmetric != b[i].locally_symmetric ||
        a[i].max_residual != b[i].max_residual || a[i].z_exists != b[i].z_exists ||
        a[i].c_space != b[i].c_space || a[i].params != b[i].params)
      return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int per_axis = argc > 1 ? std::atoi(argv[1]) : 16;

  SweepSpec spec;
  spec.catalog_name = "milnor-uni";
  spec.axes = {{"a", axis(per_axis, -1.5, 1.5)},
               {"b", axis(per_axis, -1.5, 1.5)},
               {"c", axis(per_axis, -1.5, 1.5)}};

  const std::size_t rows = sweep_size(spec);
  std::printf("sweep: milnor-uni, %d^3 = %zu rows (full pipeline per row)\n",
              per_axis, rows);
#ifdef _OPENMP
  std::printf("openmp: max threads = %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled at build time\n");
#endif

  std::vector<SweepRow> serial_rows, parallel_rows;
  const double ts = seconds_for(spec, ExecutionMode::Serial, serial_rows);
  const double tp = seconds_for(spec, ExecutionMode::Parallel, parallel_rows);

  std::printf("serial:   %8.3f s  (%.1f rows/ms)\n", ts, rows / ts / 1000.0);
  std::printf("parallel: %8.3f s  (%.1f rows/ms)\n", tp, rows / tp / 1000.0);
  std::printf("speedup:  %8.2fx\n", ts / tp);

  if (!rows_equal(serial_rows, parallel_rows)) {
    std::printf("FAIL: serial and parallel rows differ\n");
    return 1;
  }
  std::printf("check:    serial and parallel rows identical\n");
  return 0;
}
