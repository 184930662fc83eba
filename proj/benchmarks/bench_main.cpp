#include <benchmark/benchmark.h>

#include "beic/clique.hpp"
#include "beic/clutter.hpp"
#include "beic/engine.hpp"
#include "beic/oracle.hpp"
#include "beic/prime.hpp"
#include "beic/random.hpp"

namespace {

beic::Clutter path_clutter(std::size_t n) {
  std::vector<std::string> labels(n);
  std::vector<std::vector<std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({labels[i], labels[i + 1]});
  }
  return beic::Clutter::make(labels, edges);
}

void BM_CutSetsPath(benchmark::State& state) {
  const auto c = path_clutter(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(beic::cut_sets(c));
  }
}
BENCHMARK(BM_CutSetsPath)->Arg(12)->Arg(16)->Arg(20);

void BM_CutSetsPathThreaded(benchmark::State& state) {
  const auto c = path_clutter(20);
  const beic::EnumOptions opts{24, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(beic::cut_sets(c, opts));
  }
}
BENCHMARK(BM_CutSetsPathThreaded)->Arg(1)->Arg(2)->Arg(4);

void BM_MaximalCliques(benchmark::State& state) {
  const auto c = beic::random_clutter(7, static_cast<std::size_t>(state.range(0)),
                                      static_cast<std::size_t>(state.range(0)) * 2, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(beic::maximal_cliques(c));
  }
}
BENCHMARK(BM_MaximalCliques)->Arg(16)->Arg(32);

void BM_OracleMinimalPrimes(benchmark::State& state) {
  const auto c = beic::random_clutter(11, static_cast<std::size_t>(state.range(0)),
                                      static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(beic::oracle::minimal_primes(c));
  }
}
BENCHMARK(BM_OracleMinimalPrimes)->Arg(8)->Arg(10)->Arg(12);

void BM_CmVerdict(benchmark::State& state) {
  const auto c = path_clutter(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(beic::cm_verdict(c));
  }
}
BENCHMARK(BM_CmVerdict)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
