#include <benchmark/benchmark.h>

#include <random>

#include "ordram/antichain.hpp"
#include "ordram/canonize.hpp"
#include "ordram/clause_graph.hpp"
#include "ordram/schema.hpp"

using namespace ordram;

static void BM_TriangleScan(benchmark::State& state) {
  ClauseGraph g = standard_graph();
  Window w{g.delta, static_cast<Nat>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(triangle_scan(g, w));
  state.counters["vertices"] = static_cast<double>(window_size(w));
}
BENCHMARK(BM_TriangleScan)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_ExtractTables(benchmark::State& state) {
  ClauseGraph g = standard_graph();
  Window w{g.delta, static_cast<Nat>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(extract_tables(g, w, 3));
}
BENCHMARK(BM_ExtractTables)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Claim2(benchmark::State& state) {
  ClauseGraph g = standard_graph();
  Ordinal theta = add(Ordinal::omega_pow(3), Ordinal::omega_pow(2, static_cast<Nat>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(claim2_suite(g, theta));
}
BENCHMARK(BM_Claim2)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_Canonize(benchmark::State& state) {
  TruncatedTree tree(static_cast<Nat>(state.range(0)), static_cast<Nat>(state.range(1)));
  auto c = random_tree_colouring(tree, 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(canonize_truncated(tree, c, 3, 0));
}
BENCHMARK(BM_Canonize)->Args({2, 64})->Args({3, 16})->Unit(benchmark::kMillisecond);

static void BM_Distinguish(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<FinSet> sets;
  while (sets.size() < 1000) {
    FinSet s;
    std::size_t size = 1 + rng() % 12;
    while (s.size() < size) {
      s.push_back(rng() % 10000);
      s = make_set(s);
    }
    bool fine = true;
    for (const auto& t : sets) fine = fine && !is_subset(s, t) && !is_subset(t, s);
    if (fine) sets.push_back(std::move(s));
  }
  FinSetFamily fam(sets);
  for (auto _ : state) benchmark::DoNotOptimize(distinguish(fam, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Distinguish)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
