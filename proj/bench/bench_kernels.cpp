// Serial reference vs OpenMP kernels, plus the end-to-end pieces they feed.
//
//   ./build/bench/bench_kernels --benchmark_filter=Multiply
//   OMP_NUM_THREADS=4 ./build/bench/bench_kernels

#include "lapbound/eigen.hpp"
#include "lapbound/graph.hpp"
#include "lapbound/kernels.hpp"
#include "lapbound/matrix.hpp"
#include "lapbound/verify.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace lapbound;

namespace {

std::vector<double> random_matrix(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> a(n * n);
  for (auto& x : a) x = rng.uniform();
  return a;
}

template <void (*Multiply)(std::span<const double>, std::span<const double>, std::size_t, std::span<double>)>
void BM_Multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1);
  const auto b = random_matrix(n, 2);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    Multiply(a, b, n, c);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * n));
}

template <double (*Trace)(std::span<const double>, std::span<const double>, std::size_t)>
void BM_TraceOfProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 3);
  const auto b = random_matrix(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(Trace(a, b, n));
}

void BM_TracePower4(benchmark::State& state) {
  const Graph g = generate_connected_gnp(static_cast<std::size_t>(state.range(0)), 0.3, 9);
  const SymMatrix q = signless_laplacian(g);
  for (auto _ : state) benchmark::DoNotOptimize(trace_power(q, 4));
}

void BM_Tr4ClosedForm(benchmark::State& state) {
  const Graph g = generate_connected_gnp(static_cast<std::size_t>(state.range(0)), 0.3, 9);
  for (auto _ : state) benchmark::DoNotOptimize(tr4_signless_closed(g));
}

void BM_Jacobi(benchmark::State& state) {
  const Graph g = generate_connected_gnp(static_cast<std::size_t>(state.range(0)), 0.3, 9);
  const SymMatrix q = signless_laplacian(g);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(q).values.data());
}

void BM_Verify(benchmark::State& state) {
  const VerifyConfig cfg{4, 12, static_cast<std::size_t>(state.range(0)), 0.5, 42};
  for (auto _ : state) benchmark::DoNotOptimize(run_verify(cfg).graphs);
}

} // namespace

BENCHMARK(BM_Multiply<kernels::serial::multiply>)->Name("Multiply/serial")->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_Multiply<kernels::omp::multiply>)->Name("Multiply/omp")->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_TraceOfProduct<kernels::serial::trace_of_product>)->Name("TraceOfProduct/serial")->Range(64, 1024);
BENCHMARK(BM_TraceOfProduct<kernels::omp::trace_of_product>)->Name("TraceOfProduct/omp")->Range(64, 1024);
BENCHMARK(BM_TracePower4)->Arg(16)->Arg(64);
BENCHMARK(BM_Tr4ClosedForm)->Arg(16)->Arg(64);
BENCHMARK(BM_Jacobi)->Arg(16)->Arg(64);
BENCHMARK(BM_Verify)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
