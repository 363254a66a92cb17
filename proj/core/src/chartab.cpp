#include "bitwist/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "bitwist/errors.hpp"

namespace bitwist {

  ClassData class_data(FiniteGroup const& g) {
    TwistedPartition p = conjugacy_classes(g);
    ClassData        c;
    c.classes  = std::move(p.classes);
    c.reps     = std::move(p.reps);
    c.class_of = std::move(p.class_of);
    for (auto const& cls : c.classes) {
      c.sizes.push_back(cls.size());
    }
    return c;
  }

  ClassAlgebra class_mult_coefficients(FiniteGroup const& g,
                                       ClassData const&   classes) {
    std::size_t const          r = classes.size();
    ClassAlgebra               a(r);
    std::vector<std::uint64_t> hits(g.order());
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        std::fill(hits.begin(), hits.end(), 0);
        for (Element x : classes.classes[i]) {
          for (Element y : classes.classes[j]) {
            ++hits[g.mul(x, y)];
          }
        }
        for (std::size_t k = 0; k < r; ++k) {
          std::uint64_t const value = hits[classes.reps[k]];
          for (Element z : classes.classes[k]) {
            if (hits[z] != value) {
              throw InconsistentClassAlgebra(
                  "class product count depends on the representative of "
                  "class "
                  + std::to_string(k));
            }
          }
          a(i, j, k) = value;
        }
      }
    }
    return a;
  }

  namespace {
    using Complex = std::complex<double>;

    struct RowKey {
      long                                    degree;
      bool                                    nontrivial;
      std::vector<std::pair<long long, long long>> rounded;
      auto operator<=>(RowKey const&) const = default;
    };

    double snap(double x) {
      return std::abs(x) < 1e-12 ? 0.0 : x;
    }

    // One table attempt from a given random combination. Returns false when
    // the eigenvalues of the combination are not separated.
    bool try_table(FiniteGroup const& g, ClassAlgebra const& a,
                   ClassData const& classes, std::mt19937_64& rng,
                   CharacterTable& out) {
      auto const r = static_cast<Eigen::Index>(classes.size());
      std::normal_distribution<double> normal(0.0, 1.0);
      Eigen::MatrixXd                  comb = Eigen::MatrixXd::Zero(r, r);
      for (Eigen::Index i = 0; i < r; ++i) {
        double const c = normal(rng);
        for (Eigen::Index j = 0; j < r; ++j) {
          for (Eigen::Index k = 0; k < r; ++k) {
            comb(j, k) += c * static_cast<double>(a(i, j, k));
          }
        }
      }
      Eigen::EigenSolver<Eigen::MatrixXd> solver(comb);
      if (solver.info() != Eigen::Success) {
        return false;
      }
      Eigen::VectorXcd const lambda = solver.eigenvalues();
      double                 scale  = 1.0;
      for (Eigen::Index p = 0; p < r; ++p) {
        scale = std::max(scale, std::abs(lambda(p)));
      }
      for (Eigen::Index p = 0; p < r; ++p) {
        for (Eigen::Index q = p + 1; q < r; ++q) {
          if (std::abs(lambda(p) - lambda(q)) < 1e-6 * scale) {
            return false;
          }
        }
      }

      Eigen::MatrixXcd const combc = comb.cast<Complex>();
      double const           order = static_cast<double>(g.order());
      std::vector<std::pair<RowKey, std::vector<Complex>>> rows;
      std::vector<long>                                    degrees;
      for (Eigen::Index p = 0; p < r; ++p) {
        Eigen::VectorXcd w = solver.eigenvectors().col(p);
        // One step of shifted inverse iteration sharpens the eigenvector.
        Complex const          shift = lambda(p) + Complex(1e-9 * scale, 0.0);
        Eigen::MatrixXcd const shifted
            = combc - shift * Eigen::MatrixXcd::Identity(r, r);
        Eigen::VectorXcd refined = shifted.partialPivLu().solve(w);
        if (refined.allFinite() && refined.norm() > 0) {
          w = refined;
        }
        if (std::abs(w(0)) < 1e-12 * w.norm()) {
          return false;
        }
        w /= w(0);  // central character: omega(K_identity) = 1

        double norm = 0.0;
        for (Eigen::Index j = 0; j < r; ++j) {
          norm += std::norm(w(j)) / static_cast<double>(classes.sizes[j]);
        }
        double const degree  = std::sqrt(order / norm);
        long const   rounded = std::lround(degree);
        if (std::abs(degree - static_cast<double>(rounded)) > 1e-6
            || rounded <= 0) {
          throw ToleranceExceeded("character degree " + std::to_string(degree)
                                  + " is not an integer");
        }
        std::vector<Complex> row(r);
        RowKey               key{rounded, false, {}};
        for (Eigen::Index j = 0; j < r; ++j) {
          Complex v = static_cast<double>(rounded) * w(j)
                      / static_cast<double>(classes.sizes[j]);
          v      = Complex(snap(v.real()), snap(v.imag()));
          row[j] = v;
          key.nontrivial = key.nontrivial || std::abs(v - 1.0) > 1e-6;
          key.rounded.emplace_back(std::llround(-v.real() * 1e6),
                                   std::llround(-v.imag() * 1e6));
        }
        rows.emplace_back(std::move(key), std::move(row));
      }
      std::sort(rows.begin(), rows.end(),
                [](auto const& x, auto const& y) { return x.first < y.first; });

      out.values.clear();
      out.degrees.clear();
      for (auto& [key, row] : rows) {
        out.degrees.push_back(key.degree);
        out.values.push_back(std::move(row));
      }
      return true;
    }

    void measure_orthogonality(FiniteGroup const& g, CharacterTable& t) {
      std::size_t const r     = t.size();
      double const      order = static_cast<double>(g.order());
      double            row = 0.0, col = 0.0;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
          Complex inner = 0.0;
          for (std::size_t j = 0; j < r; ++j) {
            inner += static_cast<double>(t.classes.sizes[j]) * t.values[i][j]
                     * std::conj(t.values[k][j]);
          }
          row = std::max(row, std::abs(inner / order - (i == k ? 1.0 : 0.0)));
        }
      }
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t k = 0; k < r; ++k) {
          Complex inner = 0.0;
          for (std::size_t i = 0; i < r; ++i) {
            inner += t.values[i][j] * std::conj(t.values[i][k]);
          }
          double const expect
              = j == k ? order / static_cast<double>(t.classes.sizes[j]) : 0.0;
          col = std::max(col, std::abs(inner - expect) / order);
        }
      }
      t.row_residual    = row;
      t.column_residual = col;
    }
  }  // namespace

  CharacterTable character_table(FiniteGroup const& g, std::uint64_t seed) {
    CharacterTable table;
    table.classes         = class_data(g);
    ClassAlgebra const a  = class_mult_coefficients(g, table.classes);
    std::mt19937_64    rng(seed);
    for (unsigned attempt = 1; attempt <= character_retry_budget; ++attempt) {
      table.attempts = attempt;
      if (try_table(g, a, table.classes, rng, table)) {
        measure_orthogonality(g, table);
        if (table.row_residual > character_tolerance
            || table.column_residual > character_tolerance) {
          throw ToleranceExceeded(
              "orthogonality residual " + std::to_string(table.row_residual)
              + " / " + std::to_string(table.column_residual));
        }
        long sum = 0;
        for (long d : table.degrees) {
          sum += d * d;
        }
        if (sum != static_cast<long>(g.order())) {
          throw ToleranceExceeded("sum of squared degrees is "
                                  + std::to_string(sum));
        }
        return table;
      }
    }
    throw DegenerateCombination("no separating class-sum combination after "
                                + std::to_string(character_retry_budget)
                                + " attempts");
  }

  std::vector<std::size_t> class_permutation(FiniteGroup const& g,
                                             ClassData const&   classes,
                                             GroupMap const&    alpha) {
    if (alpha.domain_order() != g.order()) {
      throw InvalidMap("map does not act on this group");
    }
    std::vector<std::size_t> perm(classes.size());
    for (std::size_t j = 0; j < classes.size(); ++j) {
      perm[j] = classes.class_of[alpha(classes.reps[j])];
    }
    return perm;
  }

  std::vector<std::size_t> dual_action(FiniteGroup const&    g,
                                       CharacterTable const& table,
                                       GroupMap const&       alpha) {
    if (!alpha.is_validated() || !alpha.is_bijective()) {
      throw NotAutomorphism("the induced map on the dual needs an automorphism");
    }
    auto const               cls = class_permutation(g, table.classes, alpha);
    std::size_t const        r   = table.size();
    std::vector<std::size_t> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t match   = r;
      std::size_t matches = 0;
      for (std::size_t k = 0; k < r; ++k) {
        double diff = 0.0;
        for (std::size_t j = 0; j < r; ++j) {
          diff = std::max(diff,
                          std::abs(table.values[i][cls[j]] - table.values[k][j]));
        }
        if (diff < row_match_tolerance) {
          match = k;
          ++matches;
        }
      }
      if (matches != 1) {
        throw NoMatchingRow("character " + std::to_string(i) + " matched "
                            + std::to_string(matches) + " rows");
      }
      sigma[i] = match;
    }
    return sigma;
  }

  std::size_t coincidence_count_dual(FiniteGroup const&    g,
                                     CharacterTable const& table,
                                     GroupMap const&       phi,
                                     GroupMap const&       psi) {
    auto const  s = dual_action(g, table, phi);
    auto const  t = dual_action(g, table, psi);
    std::size_t n = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      n += s[i] == t[i];
    }
    return n;
  }

  std::size_t coincidence_count_values(FiniteGroup const&    g,
                                       CharacterTable const& table,
                                       GroupMap const&       phi,
                                       GroupMap const&       psi) {
    auto const  a = class_permutation(g, table.classes, phi);
    auto const  b = class_permutation(g, table.classes, psi);
    std::size_t n = 0;
    for (auto const& row : table.values) {
      bool same = true;
      for (std::size_t j = 0; j < row.size() && same; ++j) {
        same = std::abs(row[a[j]] - row[b[j]]) < row_match_tolerance;
      }
      n += same;
    }
    return n;
  }

  CompactBfReport verify_compact_bf(FiniteGroup const&    g,
                                    CharacterTable const& table,
                                    GroupMap const&       phi,
                                    GroupMap const&       psi) {
    CompactBfReport r;
    r.reidemeister = reidemeister_number(g, phi, psi);
    r.coincidences = coincidence_count_dual(g, table, phi, psi);
    r.pass         = r.reidemeister == r.coincidences;
    return r;
  }

  CounterexampleReport counterexample_report(FiniteGroup const&    g,
                                             CharacterTable const& table) {
    auto const           trivial = GroupMap::trivial(g, g);
    CounterexampleReport r;
    r.order        = g.order();
    r.reidemeister = reidemeister_number(g, trivial, trivial);
    r.coincidences = coincidence_count_values(g, table, trivial, trivial);
    r.dual_size    = table.size();
    r.abelian      = g.is_abelian();
    r.inequality   = r.reidemeister != r.coincidences;
    r.pass = r.reidemeister == r.order && r.coincidences == r.dual_size
             && r.inequality == !r.abelian;
    return r;
  }

}  // namespace bitwist
