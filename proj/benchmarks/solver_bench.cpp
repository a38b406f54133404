#include <benchmark/benchmark.h>

#include "hkcut/io.hpp"
#include "hkcut/oracle.hpp"
#include "hkcut/solver.hpp"
#include "hkcut/terminal_cut.hpp"

namespace {

hkcut::Hypergraph instance(int n, std::uint64_t seed) {
  hkcut::GenParams params;
  params.n = n;
  params.m = 12;
  params.rank_max = std::min(4, n);
  params.weight_max = 3;
  params.seed = seed;
  return hkcut::gen_random(params);
}

void BM_MinTerminalCut(benchmark::State& state) {
  const hkcut::Hypergraph g = instance(static_cast<int>(state.range(0)), 11);
  const hkcut::VertexSet sources{0, 1};
  const hkcut::VertexSet sinks{2, 3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hkcut::min_terminal_cut(g, sources, sinks));
  }
}
BENCHMARK(BM_MinTerminalCut)->Arg(8)->Arg(10)->Arg(12);

void BM_CutRecursive(benchmark::State& state) {
  const hkcut::Hypergraph g = instance(7, 13);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hkcut::cut_recursive(g, k));
  }
}
BENCHMARK(BM_CutRecursive)->Arg(2)->Arg(3);

void BM_CutDivideConquer(benchmark::State& state) {
  const hkcut::Hypergraph g = instance(7, 13);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hkcut::cut_divide_conquer(g, k));
  }
}
BENCHMARK(BM_CutDivideConquer)->Arg(2)->Arg(3);

void BM_BruteForce(benchmark::State& state) {
  const hkcut::Hypergraph g = instance(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hkcut::min_kcut_bruteforce(g, 3));
  }
}
BENCHMARK(BM_BruteForce)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
