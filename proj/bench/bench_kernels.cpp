// Serial reference kernels against their OpenMP versions.
// Set OMP_NUM_THREADS to compare thread counts.

#include <benchmark/benchmark.h>

#include "graphgeo/generators.hpp"
#include "graphgeo/kernels.hpp"
#include "graphgeo/morse.hpp"
#include "graphgeo/simplicial.hpp"

namespace {

using namespace graphgeo;

Graph dense(std::int64_t n) { return generate({"erdos_renyi", {n, 1, 2}, 7}); }

std::vector<Simplex> vertices(const Graph& g) {
  std::vector<Simplex> layer;
  for (Vertex v = 0; v < g.order(); ++v) layer.push_back(Simplex{{v}});
  return layer;
}

template <auto Expand>
void BM_CliqueLayers(benchmark::State& state) {
  Graph g = dense(state.range(0));
  for (auto _ : state) {
    auto layer = vertices(g);
    std::size_t total = 0;
    while (!layer.empty()) {
      total += layer.size();
      layer = Expand(g, layer);
    }
    benchmark::DoNotOptimize(total);
  }
}

template <auto Table>
void BM_Curvature(benchmark::State& state) {
  Graph g = dense(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Table(g));
}

template <auto Table>
void BM_Index(benchmark::State& state) {
  Graph g = dense(state.range(0));
  auto ranks = random_injective_function(g, 1).ranks();
  for (auto _ : state) benchmark::DoNotOptimize(Table(g, ranks));
}

template <auto Search>
void BM_MinCritical(benchmark::State& state) {
  Graph g = generate({"cycle", {state.range(0)}, std::nullopt});
  for (auto _ : state) benchmark::DoNotOptimize(Search(g));
}

BENCHMARK(BM_CliqueLayers<kernels::serial::expand_layer>)->Arg(40)->Arg(80);
BENCHMARK(BM_CliqueLayers<kernels::parallel::expand_layer>)->Arg(40)->Arg(80);
BENCHMARK(BM_Curvature<kernels::serial::curvature_table>)->Arg(40)->Arg(80);
BENCHMARK(BM_Curvature<kernels::parallel::curvature_table>)->Arg(40)->Arg(80);
BENCHMARK(BM_Index<kernels::serial::index_table>)->Arg(40)->Arg(80);
BENCHMARK(BM_Index<kernels::parallel::index_table>)->Arg(40)->Arg(80);
BENCHMARK(BM_MinCritical<kernels::serial::min_critical_points>)->Arg(7)->Arg(8);
BENCHMARK(BM_MinCritical<kernels::parallel::min_critical_points>)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
