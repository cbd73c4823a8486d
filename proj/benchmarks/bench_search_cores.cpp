#include <benchmark/benchmark.h>

#include "axt/construct.hpp"
#include "axt/cover.hpp"
#include "axt/family_e.hpp"
#include "axt/graph.hpp"
#include "axt/ktree.hpp"
#include "axt/oracle.hpp"

namespace {

axt::Graph random_2tree(int n) { return axt::random_ktree(n, 2, 0xBE5Cu + n); }

// Excellent instances exercise the full scans (no early exit anywhere).
axt::Graph excellent_2tree(int approx_n) {
  return axt::embed_excellent(random_2tree(approx_n / 2)).graph;
}

void BM_RandomKTreeGen(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto g = axt::random_ktree(n, 2, 42);
    benchmark::DoNotOptimize(g);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_RandomKTreeGen)->Range(64, 16384)->Complexity();

void BM_RecognizeTwoTree(benchmark::State& state) {
  auto g = random_2tree(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto order = axt::recognize_ktree(g, 2);
    benchmark::DoNotOptimize(order);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RecognizeTwoTree)->Range(64, 16384)->Complexity();

void BM_ChordalAlpha(benchmark::State& state) {
  auto g = random_2tree(static_cast<int>(state.range(0)));
  auto order = axt::recognize_ktree(g, 2);
  auto seq = axt::elimination_sequence(*order);
  for (auto _ : state) {
    auto res = axt::chordal_alpha(g, seq);
    benchmark::DoNotOptimize(res);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ChordalAlpha)->Range(64, 16384)->Complexity();

void BM_FastExcellentWorstCase(benchmark::State& state) {
  auto g = excellent_2tree(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    bool verdict = axt::fast_excellent_2tree(g);
    benchmark::DoNotOptimize(verdict);
  }
  state.SetComplexityN(g.order());
}
BENCHMARK(BM_FastExcellentWorstCase)->Range(64, 16384)->Complexity();

void BM_PerfectCoverSearch(benchmark::State& state) {
  auto g = excellent_2tree(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cover = axt::find_perfect_cover(g, 2);
    benchmark::DoNotOptimize(cover);
  }
  state.SetComplexityN(g.order());
}
BENCHMARK(BM_PerfectCoverSearch)->Range(64, 4096)->Complexity();

void BM_Decompose(benchmark::State& state) {
  auto g = excellent_2tree(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto cert = axt::decompose(g);
    benchmark::DoNotOptimize(cert);
  }
  state.SetComplexityN(g.order());
}
BENCHMARK(BM_Decompose)->Range(64, 4096)->Complexity();

void BM_AlphaBruteforceER(benchmark::State& state) {
  // dense-ish random graphs at the oracle's comfortable end
  int n = static_cast<int>(state.range(0));
  std::vector<axt::Edge> edges;
  std::uint64_t x = 0x9e3779b97f4a7c15ULL;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      if (x % 100 < 35) edges.emplace_back(u, v);
    }
  axt::Graph g(n, edges);
  axt::OracleLimits limits{n};
  for (auto _ : state) {
    auto res = axt::alpha_bruteforce(g, limits);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_AlphaBruteforceER)->DenseRange(16, 40, 8);

void BM_ExcellenceOracleSmallKTree(benchmark::State& state) {
  auto g = axt::random_ktree(static_cast<int>(state.range(0)), 3, 7);
  for (auto _ : state) {
    bool res = axt::is_alpha_excellent(g);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_ExcellenceOracleSmallKTree)->DenseRange(8, 16, 4);

}  // namespace

BENCHMARK_MAIN();
