// Times the OpenMP kernels against their serial reference implementations
// on the entry algebras where the per-entry cost dominates (function
// entries: barycentric sup-norms; block entries: power-iteration norms).

#include <chrono>
#include <cstdio>

#include "cstar/examples.hpp"
#include "cstar/matrix.hpp"
#include "cstar/reference.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_ms(F&& body, int reps) {
  // one warm-up, then best of reps
  body();
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial code\n");
#endif

  {
    const auto a = cstar::examples::ex4_toeplitz(40);
    const auto b = a * a;  // pentadiagonal, denser work per entry
    volatile double sink = 0.0;
    const double s = time_ms(
        [&] { sink = cstar::reference::matricial_norm_serial(b).at(0, 0); }, 3);
    const double p = time_ms([&] { sink = cstar::matricial_norm(b).at(0, 0); }, 3);
    report("matricial_norm C([0,1]) n=40", s, p);
  }

  {
    const auto a = cstar::examples::ex4_toeplitz(40);
    volatile double sink = 0.0;
    const double s = time_ms(
        [&] { sink = cstar::reference::mat_mul_serial(a, a).at(0, 0).norm(); }, 3);
    const double p = time_ms([&] { sink = (a * a).at(0, 0).norm(); }, 3);
    report("mat_mul C([0,1]) n=40", s, p);
  }

  {
    const auto a = cstar::examples::ex6_block_banded(24, 7, 16);
    volatile double sink = 0.0;
    const double s = time_ms(
        [&] { sink = cstar::reference::mat_mul_serial(a, a).at(0, 0).norm(); }, 3);
    const double p = time_ms([&] { sink = (a * a).at(0, 0).norm(); }, 3);
    report("mat_mul blocks k=16 n=24", s, p);
  }

  {
    const auto a = cstar::examples::ex6_block_banded(24, 7, 16);
    const auto b = a * a;
    volatile double sink = 0.0;
    const double s = time_ms(
        [&] { sink = cstar::reference::matricial_norm_serial(b).at(0, 0); }, 3);
    const double p = time_ms([&] { sink = cstar::matricial_norm(b).at(0, 0); }, 3);
    report("matricial_norm blocks k=16 n=24", s, p);
  }

  return 0;
}
