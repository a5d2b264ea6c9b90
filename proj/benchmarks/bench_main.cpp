#include <benchmark/benchmark.h>

#include <random>

#include "topobound/boxes.hpp"
#include "topobound/coloring.hpp"
#include "topobound/gf2.hpp"
#include "topobound/homology.hpp"
#include "topobound/set_system.hpp"

using namespace topobound;

namespace {

SparseMatrixGF2 random_matrix(std::size_t rows, std::size_t cols, int density_pct) {
  std::mt19937_64 rng(rows * 31 + cols);
  SparseMatrixGF2 m;
  m.rows = rows;
  m.columns.resize(cols);
  for (auto& c : m.columns) {
    for (std::uint32_t r = 0; r < rows; ++r) {
      if (static_cast<int>(rng() % 100) < density_pct) c.push_back(r);
    }
  }
  return m;
}

void rank_bench(benchmark::State& state, RankStrategy strategy) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gf2_rank(m, strategy));
}

void BM_RankDense(benchmark::State& state) { rank_bench(state, RankStrategy::dense); }
void BM_RankSparse(benchmark::State& state) { rank_bench(state, RankStrategy::sparse); }
BENCHMARK(BM_RankDense)->Arg(128)->Arg(512)->Arg(1024);
BENCHMARK(BM_RankSparse)->Arg(128)->Arg(512)->Arg(1024);

void BM_BoxComplexCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto b = materialize(box_complex(g, BoxVariant::B).complex());
    benchmark::DoNotOptimize(b.face_count());
  }
}
BENCHMARK(BM_BoxComplexCycle)->Arg(7)->Arg(11)->Arg(15);

void BM_BoxHomologyComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const auto b = materialize(box_complex(g, BoxVariant::B0).complex());
    benchmark::DoNotOptimize(betti_gf2(b));
  }
}
BENCHMARK(BM_BoxHomologyComplete)->Arg(4)->Arg(5)->Arg(6);

void BM_ExactChiKneser(benchmark::State& state) {
  const Graph g = kneser_graph_of(all_k_subsets(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(exact_chromatic_number(g));
}
BENCHMARK(BM_ExactChiKneser)->Arg(5)->Arg(6)->Arg(7);

void BM_ExactChiRandom(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 99);
  for (auto _ : state) benchmark::DoNotOptimize(exact_chromatic_number(g));
}
BENCHMARK(BM_ExactChiRandom)->Arg(12)->Arg(18)->Arg(24);

}  // namespace
BENCHMARK_MAIN();
