// Benchmark comparing the serial reference kernels with the OpenMP ones:
// bit-packed F2 rank elimination and the Dehn-filling dimension sweep.
#include <chrono>
#include <cstdio>
#include <random>

#include "hfst/hfst.hpp"
#include "hfst/matrix.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hfst;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BitMatrix random_bits(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  BitMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int w = 0; w < m.stride(); ++w) m.word(r)[w] = rng();
  return m;
}

void bench_rank() {
  std::printf("%-22s %10s %12s %12s %8s\n", "kernel", "n", "serial[s]",
              "parallel[s]", "speedup");
  for (int n : {512, 1024, 2048, 4096}) {
    BitMatrix m = random_bits(n, 1234 + n);
    auto t0 = Clock::now();
    int r1 = matrix_rank_serial(m);
    double serial = seconds_since(t0);
    t0 = Clock::now();
    int r2 = matrix_rank(m);
    double parallel = seconds_since(t0);
    if (r1 != r2) {
      std::printf("rank mismatch: %d vs %d\n", r1, r2);
      std::exit(1);
    }
    std::printf("%-22s %10d %12.4f %12.4f %7.2fx\n", "f2_rank", n, serial,
                parallel, serial / parallel);
  }
}

// Serial reference for the sweep: same computation, plain loop.
std::vector<std::pair<int, int>> filling_dims_serial(const TypeD& p,
                                                     int window) {
  std::vector<std::pair<int, int>> dims(2 * window + 1);
  for (int i = 0; i <= 2 * window; ++i) {
    int k = i - window;
    dims[i] = {k, filling_dim(p, k)};
  }
  return dims;
}

void bench_fillings() {
  MultiCurve curve{{{staircase_word(Slope::canonical(5, 7)), false},
                    {staircase_word(Slope::canonical(-3, 4)), false}}};
  TypeD p = curve_to_typeD(curve);
  int window = 48;
  auto t0 = Clock::now();
  auto serial = filling_dims_serial(p, window);
  double s = seconds_since(t0);
  t0 = Clock::now();
  auto parallel = filling_dims(HfstInput{p}, window);
  double par = seconds_since(t0);
  if (serial != parallel) {
    std::printf("filling sweep mismatch\n");
    std::exit(1);
  }
  std::printf("%-22s %10d %12.4f %12.4f %7.2fx\n", "filling_sweep", window, s,
              par, s / par);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled\n");
#endif
  bench_rank();
  bench_fillings();
  return 0;
}
