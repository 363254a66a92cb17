#include <benchmark/benchmark.h>

#include "bitwist/polycyclic.hpp"

namespace {

  using namespace bitwist;

  // A = [[2,1],[1,1]] with the order-4 flip against the identity
  struct Setup {
    PolyGroup g{IntMatrix{{2, 1}, {1, 1}}};
    PolyAuto  flip = validate_poly_auto(g, IntMatrix{{0, 1}, {-1, 0}}, -1, {0, 0});
    PolyAuto  id   = PolyAuto::identity(g);
  };

  void BM_DecideYes(benchmark::State& state) {
    Setup const       s;
    PolyElement const u{{1, 0}, 0};
    PolyElement const gamma{{1, -1}, static_cast<long long>(state.range(0))};
    PolyElement const v = poly_multiply(
        s.g, poly_multiply(s.g, s.id.apply(s.g, gamma), u),
        poly_inverse(s.g, s.flip.apply(s.g, gamma)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          decide_twisted_conjugacy(s.g, s.flip, s.id, u, v, DecisionBudget{}));
    }
  }
  BENCHMARK(BM_DecideYes)->DenseRange(0, 3);

  void BM_DecideNo(benchmark::State& state) {
    Setup const       s;
    PolyElement const u{{0, 0}, 0};
    PolyElement const v{{0, 0}, 1};
    for (auto _ : state) {
      benchmark::DoNotOptimize(
          decide_twisted_conjugacy(s.g, s.flip, s.id, u, v, DecisionBudget{}));
    }
  }
  BENCHMARK(BM_DecideNo);

  void BM_QuotientBound(benchmark::State& state) {
    Setup const            s;
    std::vector<long long> moduli;
    for (long long m = 2; m <= state.range(0); ++m) {
      moduli.push_back(m);
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(quotient_class_lower_bound(s.g, s.flip, s.id, moduli));
    }
  }
  BENCHMARK(BM_QuotientBound)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
