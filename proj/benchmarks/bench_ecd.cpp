#include <benchmark/benchmark.h>

#include "ecd/decompose.hpp"
#include "ecd/embedding.hpp"
#include "ecd/generate.hpp"
#include "ecd/minor.hpp"
#include "ecd/oracle.hpp"
#include "ecd/paths.hpp"
#include "ecd/probe.hpp"

namespace {

void bm_decompose(benchmark::State& state, const char* family) {
  const int n = static_cast<int>(state.range(0));
  const auto g = ecd::generate({family, n, 2 * n, 1});
  if (ecd::odd_minor(g, ecd::MinorTarget::K4).outcome == ecd::MinorOutcome::Found) {
    state.SkipWithError("instance has an odd-K4 minor");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(ecd::decompose(g));
  state.counters["edges"] = g.num_edges();
}
BENCHMARK_CAPTURE(bm_decompose, almost_bipartite, "almost-bipartite")->Arg(6)->Arg(10)->Arg(16);
BENCHMARK_CAPTURE(bm_decompose, necklace, "necklace-composite")->Arg(3)->Arg(5);
BENCHMARK_CAPTURE(bm_decompose, bermuda, "bermuda")->Arg(4)->Arg(6);
BENCHMARK_CAPTURE(bm_decompose, planar, "planar-two-odd")->Arg(5)->Arg(8);

void bm_exhaustive(benchmark::State& state) {
  const auto g = ecd::generate({"doubled-graph", static_cast<int>(state.range(0)), 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(ecd::exhaustive_decompose(g));
  state.counters["edges"] = g.num_edges();
}
BENCHMARK(bm_exhaustive)->Arg(4)->Arg(6);

void bm_odd_k4(benchmark::State& state) {
  const auto g = ecd::generate({"random-eulerian-signed", static_cast<int>(state.range(0)), 14, 3});
  for (auto _ : state) benchmark::DoNotOptimize(ecd::odd_minor(g, ecd::MinorTarget::K4));
}
BENCHMARK(bm_odd_k4)->Arg(6)->Arg(8);

void bm_embedding(benchmark::State& state) {
  const auto g = ecd::generate({"planar-two-odd", 0, static_cast<int>(state.range(0)), 2});
  for (auto _ : state) benchmark::DoNotOptimize(ecd::find_two_odd_face_embedding(g));
}
BENCHMARK(bm_embedding)->Arg(8)->Arg(14);

void bm_pair_paths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ecd::SignedGraph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v, false);
  std::vector<ecd::VertexId> t;
  for (int v = 0; v < n; ++v) t.push_back(v);
  if (t.size() % 2) t.pop_back();
  for (auto _ : state) benchmark::DoNotOptimize(ecd::pair_paths(g, t));
}
BENCHMARK(bm_pair_paths)->Arg(100)->Arg(1000);

void bm_probe(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ecd::probe_conjecture(4, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_probe)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
