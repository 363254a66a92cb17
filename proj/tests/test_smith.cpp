#include <random>

#include "doctest.h"

#include "bitwist/integer.hpp"
#include "bitwist/smith.hpp"

using namespace bitwist;

namespace {
  IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c,
                          long long lo, long long hi) {
    std::uniform_int_distribution<long long> e(lo, hi);
    IntMatrix                                m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        m(i, j) = e(rng);
      }
    }
    return m;
  }

  // gcd of all k x k minors, by brute force over row/column subsets
  Integer minor_gcd(IntMatrix const& a, std::size_t k) {
    Integer                  g = 0;
    std::vector<std::size_t> rows, cols;
    auto choose = [](std::size_t n, std::size_t k) {
      std::vector<std::vector<std::size_t>> out;
      std::vector<std::size_t>              pick;
      auto rec = [&](auto&& self, std::size_t start) -> void {
        if (pick.size() == k) {
          out.push_back(pick);
          return;
        }
        for (std::size_t i = start; i < n; ++i) {
          pick.push_back(i);
          self(self, i + 1);
          pick.pop_back();
        }
      };
      rec(rec, 0);
      return out;
    };
    for (auto const& rs : choose(a.rows(), k)) {
      for (auto const& cs : choose(a.cols(), k)) {
        IntMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            m(i, j) = a(rs[i], cs[j]);
          }
        }
        g = gcd(g, m.determinant());
      }
    }
    return g;
  }
}  // namespace

TEST_CASE("integer helpers") {
  CHECK(mod(-7, 3) == 2);
  CHECK(mod(7, 3) == 1);
  CHECK(gcd(-12, 18) == 6);
  CHECK(lcm(4, 6) == 12);
  CHECK(ipow(3, 4) == 81);
  IntMatrix a{{1, 2}, {3, 4}};
  CHECK(a.determinant() == -2);
  CHECK(a * IntMatrix::identity(2) == a);
  CHECK(a.transpose()(0, 1) == 3);
  CHECK((a * IntVector{1, 1}) == IntVector{3, 7});
  CHECK(IntMatrix{{2, 0, 1}, {1, 1, 0}, {0, 3, 1}}.determinant() == 5);
  CHECK(hconcat(a, IntMatrix::identity(2)).cols() == 4);
}

TEST_CASE("smith_normal_form examples") {
  SUBCASE("2x2") {
    IntMatrix a{{2, 4}, {6, 8}};
    auto      s = smith_normal_form(a);
    CHECK(s.diagonal() == IntVector{2, 4});
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_valid_smith_form(a, s));
  }
  SUBCASE("zero and rectangular") {
    auto z = smith_normal_form(IntMatrix(2, 3));
    CHECK(z.rank() == 0);
    IntMatrix r{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto      s = smith_normal_form(r);
    CHECK(s.diagonal() == IntVector{2, 6, 12});
    IntMatrix w{{6, 4, 0, 2}};
    CHECK(smith_normal_form(w).diagonal() == IntVector{2});
  }
  SUBCASE("a tampered form is rejected") {
    IntMatrix a{{2, 4}, {6, 8}};
    auto      s = smith_normal_form(a);
    s.D(1, 1)   = 8;
    CHECK(!is_valid_smith_form(a, s));
  }
}

TEST_CASE("smith_normal_form agrees with determinantal divisors") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    IntMatrix const a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    auto const      s = smith_normal_form(a);
    REQUIRE(is_valid_smith_form(a, s));
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
    // d_1 ... d_k = gcd of k x k minors
    Integer prod = 1;
    auto    diag = s.diagonal();
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
      Integer const dk = k <= diag.size() ? diag[k - 1] : Integer(0);
      prod *= dk;
      CHECK(prod == minor_gcd(a, k));
    }
  }
}
