#include "mtz/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace mtz::kernels;

namespace {

std::vector<Laurent> factors(int N) {
  return {power_series(2.0, 0, N, true), power_series(1.0, 0, N, true), power_series(3.0, 0, N, true),
          power_series({2.0, 0.5}, 1.0 / 3, N, false)};
}

template <cplx (*F)(const std::vector<Laurent>&, int)>
void zero_freq(benchmark::State& st) {
  int N = static_cast<int>(st.range(0));
  auto f = factors(N);
  for (auto _ : st) benchmark::DoNotOptimize(F(f, N));
}

template <DirectSum (*F)(const std::vector<cplx>&, const std::vector<double>&, int)>
void direct(benchmark::State& st) {
  int N = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(F({2.0, 2.0, 2.0}, {0, 0, 0.25}, N));
}

}  // namespace

BENCHMARK(zero_freq<zero_frequency_serial>)->Name("zero_frequency/serial")->Arg(30)->Arg(100);
BENCHMARK(zero_freq<zero_frequency>)->Name("zero_frequency/omp")->Arg(30)->Arg(100);
BENCHMARK(direct<mt_direct_serial>)->Name("mt_direct/serial")->Arg(1000)->Arg(3000);
BENCHMARK(direct<mt_direct>)->Name("mt_direct/omp")->Arg(1000)->Arg(3000);

BENCHMARK_MAIN();
