#include <benchmark/benchmark.h>

#include "random_graph.hpp"
#include "rgl/canonical.hpp"
#include "rgl/constructors.hpp"

namespace {

void BM_CanonicalRandom(benchmark::State& state) {
  const rgl::Graph g = rgl::bench::random_graph(static_cast<int>(state.range(0)), 0.5, 42);
  for (auto _ : state) benchmark::DoNotOptimize(rgl::canonical_graph6(g));
}
BENCHMARK(BM_CanonicalRandom)->Arg(10)->Arg(20)->Arg(40)->Arg(60);

void BM_CanonicalRegular(benchmark::State& state) {
  const int mu = static_cast<int>(state.range(0));
  const int conn[] = {1, 3, mu - 3, mu - 1};
  const rgl::Graph g = rgl::circulant(mu, conn);
  for (auto _ : state) benchmark::DoNotOptimize(rgl::canonical_graph6(g));
}
BENCHMARK(BM_CanonicalRegular)->Arg(12)->Arg(24)->Arg(48);

void BM_Isomorphic(benchmark::State& state) {
  const int parts[] = {4, 4, 4};
  const rgl::Graph a = rgl::complete_multipartite(parts);
  const rgl::Graph b = rgl::canonical_form(a);
  for (auto _ : state) benchmark::DoNotOptimize(rgl::are_isomorphic(a, b));
}
BENCHMARK(BM_Isomorphic);

}  // namespace
