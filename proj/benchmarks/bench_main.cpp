// Micro-benchmarks for the hot paths: walk-digraph construction and the two
// hom-freeness routes, codegree scans, availability, coloring search and the
// quadratic verifier, and the pruned extremal search.

#include <benchmark/benchmark.h>

#include "tcl/coloring.hpp"
#include "tcl/constructions.hpp"
#include "tcl/extremal.hpp"
#include "tcl/hypergraph.hpp"
#include "tcl/perm_group.hpp"
#include "tcl/walks.hpp"

namespace {

using namespace tcl;

void BM_build_walk_digraph(benchmark::State& state) {
  Hypergraph h = gen_construction({3, 3, static_cast<int>(state.range(0))});
  for (auto _ : state) {
    TightWalkDigraph g = build_walk_digraph(h);
    benchmark::DoNotOptimize(g.arc_heads.data());
  }
}
BENCHMARK(BM_build_walk_digraph)->Arg(15)->Arg(30);

void BM_is_homfree_period_route(benchmark::State& state) {
  Hypergraph h = gen_construction({3, 3, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(is_homfree(h, 1).homfree);
}
BENCHMARK(BM_is_homfree_period_route)->Arg(15)->Arg(30);

void BM_is_homfree_oracle_route(benchmark::State& state) {
  Hypergraph h = gen_construction({3, 3, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(residue_reach_oracle(h, 1));
}
BENCHMARK(BM_is_homfree_oracle_route)->Arg(15)->Arg(30);

void BM_is_homfree_six_uniform(benchmark::State& state) {
  Hypergraph h = gen_construction({6, 3, 12});
  for (auto _ : state) benchmark::DoNotOptimize(is_homfree(h, 2).homfree);
}
BENCHMARK(BM_is_homfree_six_uniform);

void BM_min_codegree(benchmark::State& state) {
  Hypergraph h = gen_construction({6, 3, 12});
  for (auto _ : state) benchmark::DoNotOptimize(h.min_codegree());
}
BENCHMARK(BM_min_codegree);

void BM_availability_closed_form(benchmark::State& state) {
  for (auto _ : state) {
    bool acc = false;
    for (int k = 1; k < 8; ++k)
      for (int i = 1; i < 8; ++i) acc ^= si_available(8, k, i);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_availability_closed_form);

void BM_availability_bruteforce(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(si_available_bruteforce(8, 2, 3));
}
BENCHMARK(BM_availability_bruteforce);

void BM_find_coloring_young(benchmark::State& state) {
  Hypergraph h = gen_construction({3, 3, 9});
  for (auto _ : state) benchmark::DoNotOptimize(find_coloring(h, 1, ColorMode::young_only).sat);
}
BENCHMARK(BM_find_coloring_young);

void BM_verify_coloring_quadratic(benchmark::State& state) {
  ConstructionParams params{4, 2, 8};
  Hypergraph h = gen_construction(params);
  AccordantColoring coloring = canonical_p2_coloring(params);
  for (auto _ : state) benchmark::DoNotOptimize(verify_coloring(h, coloring).ok);
}
BENCHMARK(BM_verify_coloring_quadratic);

void BM_exact_search_five_vertices(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_search(5, 3, SearchTarget::homfree(1)).best_codegree);
}
BENCHMARK(BM_exact_search_five_vertices);

}  // namespace

BENCHMARK_MAIN();
