#include <benchmark/benchmark.h>

#include "bitwist/catalog.hpp"
#include "bitwist/chartab.hpp"

namespace {

  void BM_CharacterTableSuite(benchmark::State& state) {
    auto const suite = bitwist::catalog::automorphism_suite();
    auto const& g    = suite.at(static_cast<std::size_t>(state.range(0))).second;
    state.SetLabel(suite.at(static_cast<std::size_t>(state.range(0))).first);
    for (auto _ : state) {
      benchmark::DoNotOptimize(bitwist::character_table(g));
    }
  }
  BENCHMARK(BM_CharacterTableSuite)->DenseRange(0, 4);

  void BM_CharacterTableSymmetric(benchmark::State& state) {
    auto const g = bitwist::catalog::symmetric(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(bitwist::character_table(g));
    }
  }
  BENCHMARK(BM_CharacterTableSymmetric)->DenseRange(3, 5);

}  // namespace
