#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"

#include "bitwist/catalog.hpp"
#include "bitwist/chartab.hpp"
#include "bitwist/errors.hpp"
#include "oracles.hpp"

using namespace bitwist;

namespace {
  // Independent class-algebra check: count pairs over the whole group.
  std::uint64_t count_products(FiniteGroup const& g,
                               std::vector<std::size_t> const& class_of,
                               std::size_t i, std::size_t j, Element z) {
    std::uint64_t n = 0;
    for (Element x = 0; x < g.order(); ++x) {
      if (class_of[x] != i) {
        continue;
      }
      for (Element y = 0; y < g.order(); ++y) {
        n += class_of[y] == j && g.mul(x, y) == z;
      }
    }
    return n;
  }

  // conjugacy classes by brute-force union-find
  std::size_t class_count(FiniteGroup const& g) {
    oracle::UnionFind uf(g.order());
    for (Element x = 0; x < g.order(); ++x) {
      for (Element c = 0; c < g.order(); ++c) {
        uf.unite(x, g.mul(g.mul(c, x), g.inv(c)));
      }
    }
    return uf.count();
  }
}  // namespace

TEST_CASE("class algebra matches direct counting") {
  for (auto const& [name, g] : catalog::automorphism_suite()) {
    auto const cd = class_data(g);
    CHECK(cd.size() == class_count(g));
    CHECK(cd.classes[0] == std::vector<Element>{0});
    auto const a = class_mult_coefficients(g, cd);
    for (std::size_t i = 0; i < cd.size(); ++i) {
      for (std::size_t j = 0; j < cd.size(); ++j) {
        for (std::size_t k = 0; k < cd.size(); ++k) {
          CHECK(a(i, j, k) == count_products(g, cd.class_of, i, j, cd.reps[k]));
        }
      }
    }
  }
}

TEST_CASE("character tables of small groups") {
  SUBCASE("S3") {
    auto const t = character_table(catalog::symmetric(3));
    CHECK(t.degrees == std::vector<long>{1, 1, 2});
    for (auto const& v : t.values[0]) {
      CHECK(std::abs(v - 1.0) < 1e-9);
    }
  }
  SUBCASE("degrees of the suite and beyond") {
    std::vector<std::pair<FiniteGroup, std::vector<long>>> cases{
        {catalog::dihedral(4), {1, 1, 1, 1, 2}},
        {catalog::quaternion(), {1, 1, 1, 1, 2}},
        {catalog::alternating(4), {1, 1, 1, 3}},
        {catalog::dihedral(6), {1, 1, 1, 1, 2, 2}},
        {catalog::symmetric(4), {1, 1, 2, 3, 3}},
        {catalog::alternating(5), {1, 3, 3, 4, 5}},
        {catalog::cyclic(7), {1, 1, 1, 1, 1, 1, 1}},
    };
    for (auto const& [g, degrees] : cases) {
      auto const t = character_table(g);
      CHECK(t.degrees == degrees);
      CHECK(t.row_residual < character_tolerance);
      CHECK(t.column_residual < character_tolerance);
      long sum = 0;
      for (long d : t.degrees) {
        sum += d * d;
      }
      CHECK(static_cast<std::size_t>(sum) == g.order());
    }
  }
  SUBCASE("the seed does not change the table") {
    auto const g = catalog::dihedral(6);
    auto const a = character_table(g, 1);
    auto const b = character_table(g, 99);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        CHECK(std::abs(a.values[i][j] - b.values[i][j]) < 1e-6);
      }
    }
  }
}

TEST_CASE("characters are class functions with the homomorphism property") {
  // For a linear character, chi(xy) = chi(x) chi(y).
  for (auto const& [name, g] : catalog::automorphism_suite()) {
    auto const t = character_table(g);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.degrees[i] != 1) {
        continue;
      }
      auto chi = [&](Element x) { return t.values[i][t.classes.class_of[x]]; };
      for (Element x = 0; x < g.order(); ++x) {
        for (Element y = 0; y < g.order(); ++y) {
          REQUIRE(std::abs(chi(g.mul(x, y)) - chi(x) * chi(y)) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("dual action and coincidence counts") {
  for (auto const& [name, g] : catalog::automorphism_suite()) {
    auto const t     = character_table(g);
    auto const autos = automorphisms(g);
    auto const id    = GroupMap::identity(g);
    CHECK(coincidence_count_dual(g, t, id, id) == t.size());
    for (auto const& a : autos) {
      auto const sigma = dual_action(g, t, a);
      // sigma is a permutation fixing the trivial character
      std::vector<int> hit(t.size(), 0);
      for (auto s : sigma) {
        ++hit[s];
      }
      CHECK(std::count(hit.begin(), hit.end(), 1) == static_cast<long>(t.size()));
      CHECK(sigma[0] == 0);
      CHECK(coincidence_count_dual(g, t, a, id)
            == coincidence_count_values(g, t, a, id));
    }
    // inner automorphisms act trivially on characters
    for (Element c = 0; c < g.order(); ++c) {
      auto const inner = inner_automorphism(g, c);
      CHECK(coincidence_count_dual(g, t, inner, id) == t.size());
    }
    CHECK_THROWS_AS(dual_action(g, t, GroupMap::trivial(g, g)), NotAutomorphism);
  }
}

TEST_CASE("compact groups: class count equals dual coincidences") {
  for (auto const& [name, g] : catalog::automorphism_suite()) {
    auto const t     = character_table(g);
    auto const autos = automorphisms(g);
    for (auto const& a : autos) {
      for (auto const& b : autos) {
        auto const r = verify_compact_bf(g, t, a, b);
        CHECK_MESSAGE(r.pass, name);
        CHECK(r.reidemeister
              == oracle::twisted_class_count(g.order(), g.table(), a.image(),
                                             b.image()));
      }
    }
  }
}

TEST_CASE("trivial endomorphisms separate abelian from nonabelian") {
  auto const s3 = catalog::symmetric(3);
  auto       r  = counterexample_report(s3, character_table(s3));
  CHECK(r.reidemeister == 6);
  CHECK(r.coincidences == 3);
  CHECK(r.pass);
  auto const d4 = catalog::dihedral(4);
  r             = counterexample_report(d4, character_table(d4));
  CHECK(r.reidemeister == 8);
  CHECK(r.coincidences == 5);
  auto const c6 = catalog::cyclic(6);
  r             = counterexample_report(c6, character_table(c6));
  CHECK(r.reidemeister == r.coincidences);
  CHECK(r.abelian);
  CHECK(r.pass);
}

TEST_CASE("Brauer: fixed characters match fixed classes") {
  for (auto const& [name, g] : catalog::automorphism_suite()) {
    auto const t = character_table(g);
    for (auto const& a : automorphisms(g)) {
      auto const  sigma = dual_action(g, t, a);
      auto const  pi    = class_permutation(g, t.classes, a);
      std::size_t fixed_chars = 0, fixed_classes = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        fixed_chars += sigma[i] == i;
        fixed_classes += pi[i] == i;
      }
      CHECK_MESSAGE(fixed_chars == fixed_classes, name);
    }
  }
}

TEST_CASE("Klein four group: swap fixes two characters") {
  // (0 1) and (2 3) generate Z_2 + Z_2; swap them
  auto const g    = group_from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}});
  auto const swap = extend_from_generators(g, g, {g.generators()[1].second,
                                                  g.generators()[0].second});
  auto const t    = character_table(g);
  auto const id   = GroupMap::identity(g);
  CHECK(coincidence_count_dual(g, t, swap, id) == 2);
  auto const sigma = dual_action(g, t, swap);
  std::size_t moved = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    moved += sigma[i] != i;
  }
  CHECK(moved == 2);
}

TEST_CASE("cyclic groups: characters are roots of unity") {
  for (std::size_t n : {2, 5, 8, 12}) {
    auto const g = catalog::cyclic(n);
    auto const t = character_table(g);
    CHECK(t.size() == n);
    Element const gen = g.generators()[0].second;
    std::vector<std::complex<double>> seen;
    for (std::size_t i = 0; i < n; ++i) {
      auto const z = t.values[i][t.classes.class_of[gen]];
      CHECK(std::abs(std::pow(z, static_cast<double>(n)) - 1.0) < 1e-8);
      for (auto const& w : seen) {
        CHECK(std::abs(w - z) > 1e-6);
      }
      seen.push_back(z);
    }
  }
}
