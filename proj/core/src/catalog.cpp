#include "bitwist/catalog.hpp"

#include <numeric>

#include "bitwist/errors.hpp"

namespace bitwist::catalog {

  namespace {
    Permutation cycle(std::size_t degree, std::vector<std::uint32_t> points) {
      Permutation p(degree);
      std::iota(p.begin(), p.end(), 0u);
      for (std::size_t i = 0; i < points.size(); ++i) {
        p[points[i]] = points[(i + 1) % points.size()];
      }
      return p;
    }

    Permutation product(Permutation const& a, Permutation const& b) {
      Permutation c(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = b[a[i]];
      }
      return c;
    }

    std::vector<std::uint32_t> range(std::size_t n) {
      std::vector<std::uint32_t> r(n);
      std::iota(r.begin(), r.end(), 0u);
      return r;
    }
  }  // namespace

  FiniteGroup cyclic(std::size_t n) {
    if (n <= 1) {
      return group_from_permutations({});
    }
    return group_from_permutations({cycle(n, range(n))});
  }

  FiniteGroup symmetric(std::size_t n) {
    if (n <= 1) {
      return group_from_permutations({});
    }
    if (n == 2) {
      return group_from_permutations({cycle(2, {0, 1})});
    }
    return group_from_permutations({cycle(n, {0, 1}), cycle(n, range(n))});
  }

  FiniteGroup alternating(std::size_t n) {
    if (n <= 2) {
      return group_from_permutations({});
    }
    std::vector<Permutation> gens;
    for (std::uint32_t i = 2; i < n; ++i) {
      gens.push_back(cycle(n, {0, 1, i}));
    }
    return group_from_permutations(gens);
  }

  FiniteGroup dihedral(std::size_t n) {
    if (n < 3) {
      throw Error("dihedral group needs n >= 3");
    }
    Permutation reflection(n);
    for (std::size_t i = 0; i < n; ++i) {
      reflection[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    return group_from_permutations({cycle(n, range(n)), reflection});
  }

  FiniteGroup quaternion() {
    // i and j acting on the 8 elements {1,i,-1,-i, j,-k,-j,k} by right mult.
    Permutation i = product(cycle(8, {0, 1, 2, 3}), cycle(8, {4, 5, 6, 7}));
    Permutation j = product(cycle(8, {0, 4, 2, 6}), cycle(8, {1, 7, 3, 5}));
    return group_from_permutations({i, j});
  }

  FiniteGroup by_name(std::string const& name) {
    if (name.size() < 2) {
      throw Error("unknown group name: " + name);
    }
    if (name == "Q8") {
      return quaternion();
    }
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n                = std::stoul(name.substr(1), &used);
      if (used != name.size() - 1) {
        throw Error("unknown group name: " + name);
      }
    } catch (std::logic_error const&) {
      throw Error("unknown group name: " + name);
    }
    switch (name[0]) {
      case 'C':
        return cyclic(n);
      case 'S':
        return symmetric(n);
      case 'A':
        return alternating(n);
      case 'D':
        return dihedral(n);
      default:
        throw Error("unknown group name: " + name);
    }
  }

  std::vector<std::pair<std::string, FiniteGroup>> automorphism_suite() {
    std::vector<std::pair<std::string, FiniteGroup>> suite;
    suite.emplace_back("S3", symmetric(3));
    suite.emplace_back("D4", dihedral(4));
    suite.emplace_back("Q8", quaternion());
    suite.emplace_back("A4", alternating(4));
    suite.emplace_back("D6", dihedral(6));
    return suite;
  }

}  // namespace bitwist::catalog
