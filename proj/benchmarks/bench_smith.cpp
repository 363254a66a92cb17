#include <random>

#include <benchmark/benchmark.h>

#include "bitwist/smith.hpp"

namespace {

  bitwist::IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> entry(-50, 50);
    bitwist::IntMatrix                       a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = entry(rng);
      }
    }
    return a;
  }

  void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(7);
    auto const      a = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) {
      benchmark::DoNotOptimize(bitwist::smith_normal_form(a));
    }
  }
  BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 12, 2);

}  // namespace
