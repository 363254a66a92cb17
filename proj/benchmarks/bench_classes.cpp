#include <random>

#include <benchmark/benchmark.h>

#include "bitwist/abelian.hpp"
#include "bitwist/catalog.hpp"
#include "bitwist/finite_group.hpp"

namespace {

  // orbit enumeration on D_n, both maps the identity
  void BM_TwistedClassesDihedral(benchmark::State& state) {
    auto const g  = bitwist::catalog::dihedral(static_cast<unsigned>(state.range(0)));
    auto const id = bitwist::GroupMap::identity(g);
    for (auto _ : state) {
      benchmark::DoNotOptimize(bitwist::twisted_classes(g, id, id));
    }
    state.SetComplexityN(static_cast<long>(g.order()));
  }
  BENCHMARK(BM_TwistedClassesDihedral)->RangeMultiplier(2)->Range(4, 64)->Complexity();

  // Smith-index route for the same kind of question on Z_2^k
  void BM_ReidemeisterAbelian(benchmark::State& state) {
    std::mt19937_64 rng(1);
    bitwist::FgAbelianGroup const g(
        bitwist::IntVector(static_cast<std::size_t>(state.range(0)), 2), 0);
    auto const phi = bitwist::random_endomorphism(g, rng);
    auto const psi = bitwist::random_endomorphism(g, rng);
    for (auto _ : state) {
      benchmark::DoNotOptimize(bitwist::reidemeister_abelian(phi, psi));
    }
  }
  BENCHMARK(BM_ReidemeisterAbelian)->DenseRange(1, 6);

}  // namespace
