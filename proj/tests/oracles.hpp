#ifndef BITWIST_TESTS_ORACLES_HPP_
#define BITWIST_TESTS_ORACLES_HPP_

// Brute-force reference computations used only by the tests. Nothing here
// calls the code paths it is used to check.

#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bitwist/finite_group.hpp"
#include "bitwist/integer.hpp"

namespace oracle {

  using bitwist::Element;
  using bitwist::Integer;
  using bitwist::IntVector;
  using Rational = boost::multiprecision::cpp_rational;

  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n) {
      std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
      while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x          = parent_[x];
      }
      return x;
    }
    void unite(std::size_t a, std::size_t b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent_[std::max(a, b)] = std::min(a, b);
      }
    }
    std::size_t count() {
      std::size_t c = 0;
      for (std::size_t i = 0; i < parent_.size(); ++i) {
        c += find(i) == i;
      }
      return c;
    }

   private:
    std::vector<std::size_t> parent_;
  };

  //! Class count by union-find over every (x, gamma) pair, using only the
  //! raw table and image lists.
  inline std::size_t twisted_class_count(std::size_t                 n,
                                         std::span<Element const>    table,
                                         std::vector<Element> const& phi,
                                         std::vector<Element> const& psi) {
    auto mul = [&](Element a, Element b) { return table[a * n + b]; };
    std::vector<Element> inv(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (mul(a, b) == 0) {
          inv[a] = b;
        }
      }
    }
    UnionFind uf(n);
    for (Element x = 0; x < n; ++x) {
      for (Element c = 0; c < n; ++c) {
        uf.unite(x, mul(mul(psi[c], x), inv[phi[c]]));
      }
    }
    return uf.count();
  }

  //! All vectors of Z_{d_1} + ... + Z_{d_k} in odometer order.
  inline std::vector<IntVector> abelian_elements(IntVector const& d) {
    std::vector<IntVector> out;
    IntVector              x(d.size());
    while (true) {
      out.push_back(x);
      std::size_t i = 0;
      while (i < d.size() && ++x[i] == d[i]) {
        x[i] = 0;
        ++i;
      }
      if (i == d.size()) {
        break;
      }
    }
    return out;
  }

  inline IntVector apply_mod(bitwist::IntMatrix const& m, IntVector const& x,
                             IntVector const& d) {
    IntVector y(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = 0; j < d.size(); ++j) {
        y[i] += m(i, j) * x[j];
      }
      y[i] %= d[i];
      if (y[i] < 0) {
        y[i] += d[i];
      }
    }
    return y;
  }

  //! Orbit count of x -> x + psi(g) - phi(g) computed on coordinate vectors.
  inline std::size_t abelian_class_count(IntVector const&          d,
                                         bitwist::IntMatrix const& phi,
                                         bitwist::IntMatrix const& psi) {
    auto const                  elems = abelian_elements(d);
    std::set<IntVector>         image;  // the subgroup Im(psi - phi)
    for (auto const& g : elems) {
      IntVector a = apply_mod(psi, g, d);
      IntVector b = apply_mod(phi, g, d);
      for (std::size_t i = 0; i < d.size(); ++i) {
        a[i] = (a[i] - b[i]) % d[i];
        if (a[i] < 0) {
          a[i] += d[i];
        }
      }
      image.insert(a);
    }
    return elems.size() / image.size();
  }

  //! #{y : chi_y(phi x) = chi_y(psi x) for all x}, comparing exact phases.
  inline std::size_t dual_coincidences(IntVector const&          d,
                                       bitwist::IntMatrix const& phi,
                                       bitwist::IntMatrix const& psi) {
    auto const  elems = abelian_elements(d);
    std::size_t count = 0;
    for (auto const& y : elems) {
      bool coincide = true;
      for (auto const& x : elems) {
        IntVector const a     = apply_mod(phi, x, d);
        IntVector const b     = apply_mod(psi, x, d);
        Rational        phase = 0;
        for (std::size_t i = 0; i < d.size(); ++i) {
          phase += Rational((a[i] - b[i]) * y[i], d[i]);
        }
        if (denominator(phase) != 1) {
          coincide = false;
          break;
        }
      }
      count += coincide;
    }
    return count;
  }

  //! B(1,n) element as an exact rational pair, multiplied by the rule
  //! (x, r)(y, s) = (x + y n^-r, r + s) directly in Q.
  struct QPair {
    Rational  x;
    long long t;
    friend bool operator==(QPair const&, QPair const&) = default;
  };

  inline Rational npow(long long n, long long e) {
    Rational r = 1;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) {
      r *= n;
    }
    return e < 0 ? Rational(1) / r : r;
  }

  inline QPair qmul(long long n, QPair const& p, QPair const& q) {
    return {p.x + q.x * npow(n, -p.t), p.t + q.t};
  }

}  // namespace oracle

#endif  // BITWIST_TESTS_ORACLES_HPP_
