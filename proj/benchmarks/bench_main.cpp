#include <benchmark/benchmark.h>

#include "support/synthetic.hpp"
#include "tomatomp/tomatomp.hpp"

using namespace tomatomp;

namespace {

void BM_Persistence(benchmark::State& state) {
  const auto side = static_cast<std::size_t>(state.range(0));
  synth::Rng rng(1);
  const Graph g = grid_graph(side, side, 8);
  const ScalarField f = synth::injective_field(rng, side * side);
  for (auto _ : state) benchmark::DoNotOptimize(compute_persistence(g, f));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(side * side));
}
BENCHMARK(BM_Persistence)->Arg(32)->Arg(128)->Arg(512);

PersistenceDiagram random_diagram(synth::Rng& rng, std::size_t n) {
  PersistenceDiagram d;
  for (std::size_t i = 0; i < n; ++i) {
    const double death = synth::uniform(rng, 0.0, 1.0);
    d.push_back({death + synth::uniform(rng, 0.0, 1.0), death, std::nullopt, false});
  }
  return d;
}

void BM_DiagramDistance(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double q = state.range(1) == 0 ? kInfinity : static_cast<double>(state.range(1));
  synth::Rng rng(2);
  const auto a = random_diagram(rng, n);
  const auto b = random_diagram(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(diagram_distance(a, b, q));
}
BENCHMARK(BM_DiagramDistance)->Args({50, 2})->Args({50, 0})->Args({200, 2})->Args({200, 0});

void BM_Decomposition(benchmark::State& state) {
  const auto lines = static_cast<std::size_t>(state.range(0));
  synth::Rng rng(3);
  const synth::Blobs b = synth::two_blobs(rng);
  const Graph g = neighborhood_graph(b.cloud, 0.3);
  std::vector<double> second(b.f.values().begin(), b.f.values().end());
  for (std::size_t i = 0; i < second.size(); ++i) second[i] = 0.5 * second[i] + b.cloud[i][1] * 0.1;
  const std::vector<ScalarField> fields{b.f, ScalarField(second)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cluster_multiparameter(fields, g, 0.2, lines));
  }
}
BENCHMARK(BM_Decomposition)->Arg(20)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
