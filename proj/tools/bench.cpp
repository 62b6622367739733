#include <benchmark/benchmark.h>

#include <random>

#include "pdmosc/matrix.hpp"

namespace {

pdmosc::Matrix random_matrix(int r, int c, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  pdmosc::Matrix m(r, c);
  for (double& v : m.a) v = dist(rng);
  return m;
}

void BM_gemm_serial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto A = random_matrix(n, n, 1), B = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pdmosc::kernels::gemm_serial(A, B));
}

void BM_gemm_parallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto A = random_matrix(n, n, 1), B = random_matrix(n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pdmosc::kernels::gemm_parallel(A, B));
}

// The quadrature contraction shape: N basis states sampled on G nodes,
// C = (weighted samples) * (operator images)^T.
void BM_gemm_nt_serial(benchmark::State& state) {
  int N = static_cast<int>(state.range(0)), G = 8 * N + 32;
  auto A = random_matrix(N, G, 3), B = random_matrix(N, G, 4);
  for (auto _ : state) benchmark::DoNotOptimize(pdmosc::kernels::gemm_nt_serial(A, B));
}

void BM_gemm_nt_parallel(benchmark::State& state) {
  int N = static_cast<int>(state.range(0)), G = 8 * N + 32;
  auto A = random_matrix(N, G, 3), B = random_matrix(N, G, 4);
  for (auto _ : state) benchmark::DoNotOptimize(pdmosc::kernels::gemm_nt_parallel(A, B));
}

}  // namespace

BENCHMARK(BM_gemm_serial)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_gemm_parallel)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_gemm_nt_serial)->Arg(32)->Arg(128)->Arg(512);
BENCHMARK(BM_gemm_nt_parallel)->Arg(32)->Arg(128)->Arg(512);

BENCHMARK_MAIN();
