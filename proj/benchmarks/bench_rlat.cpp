#include <benchmark/benchmark.h>

#include "rlat/rlat.hpp"

using namespace rlat;

static void BM_LatticesOfSize(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lattices_of_size(n));
  }
}
BENCHMARK(BM_LatticesOfSize)->DenseRange(5, 7);

static void BM_IntegralExpansions(benchmark::State& state) {
  auto lats = lattices_of_size(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t total = 0;
    for (auto const& lat : lats) {
      SearchSpec s;
      s.lattice          = lat;
      s.require_integral = true;
      total += expansions(s).size();
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_IntegralExpansions)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_Corpus(benchmark::State& state) {
  CorpusOptions opt;
  opt.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_corpus(opt));
  }
}
BENCHMARK(BM_Corpus)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ConvLattice(benchmark::State& state) {
  auto a = builtin("chain2cubed");
  for (auto _ : state) {
    benchmark::DoNotOptimize(all_convex_subalgebras(a));
  }
}
BENCHMARK(BM_ConvLattice);

static void BM_SemilinearAllRoutes(benchmark::State& state) {
  auto a = builtin("example5");
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_semilinear(a));
  }
}
BENCHMARK(BM_SemilinearAllRoutes);

static void BM_CongruenceOracle(benchmark::State& state) {
  auto a = builtin("chain2cubed");
  for (auto _ : state) {
    benchmark::DoNotOptimize(congruences_oracle(a));
  }
}
BENCHMARK(BM_CongruenceOracle)->Unit(benchmark::kMillisecond);

static void BM_BnVerify(benchmark::State& state) {
  std::vector<Rational> grid;
  for (auto q : {"-2", "-1", "-1/2", "-1/3", "0", "1/3", "1/2", "1", "2"}) {
    grid.push_back(parse_rational(q));
  }
  auto n = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bn_verify(n, grid));
  }
}
BENCHMARK(BM_BnVerify)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
