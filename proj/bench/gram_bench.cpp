// Compares the OpenMP Gram-matrix assembly against the serial reference on a
// few representative (degree, level) pairs and reports wall times.

#include <cstdio>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "phin/fock.hpp"

namespace {

double wall_time() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

}  // namespace

int main() {
  const int cases[][2] = {{0, 10}, {1, 12}, {2, 13}, {3, 14}};
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif
  std::printf("%6s %6s %6s %12s %12s %8s\n", "degree", "level", "dim", "serial[s]",
              "parallel[s]", "speedup");
  for (const auto& c : cases) {
    const int degree = c[0];
    const int level = c[1];

    double t0 = wall_time();
    const phin::GramMatrix serial = phin::gram_matrix_serial(degree, level);
    double t1 = wall_time();
    const phin::GramMatrix parallel = phin::gram_matrix(degree, level);
    double t2 = wall_time();

    if (serial.entries.data != parallel.entries.data) {
      throw std::logic_error("parallel Gram matrix disagrees with serial reference");
    }
    const double serial_s = t1 - t0;
    const double parallel_s = t2 - t1;
    std::printf("%6d %6d %6zu %12.4f %12.4f %8.2f\n", degree, level,
                serial.basis.size(), serial_s, parallel_s,
                parallel_s > 0 ? serial_s / parallel_s : 0.0);
  }
  return 0;
}
