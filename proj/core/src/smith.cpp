#include "bitwist/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace bitwist {

  namespace {
    using boost::multiprecision::abs;

    struct Pos {
      std::size_t i;
      std::size_t j;
    };

    // Smallest nonzero |entry| in the lower-right block starting at (t, t).
    std::optional<Pos> min_entry(IntMatrix const& D, std::size_t t) {
      std::optional<Pos> best;
      for (std::size_t i = t; i < D.rows(); ++i) {
        for (std::size_t j = t; j < D.cols(); ++j) {
          if (D(i, j) != 0
              && (!best || abs(D(i, j)) < abs(D(best->i, best->j)))) {
            best = Pos{i, j};
          }
        }
      }
      return best;
    }

    // Smallest nonzero |entry| in row t and column t beyond the pivot.
    std::optional<Pos> min_in_cross(IntMatrix const& D, std::size_t t) {
      std::optional<Pos> best;
      auto               consider = [&](std::size_t i, std::size_t j) {
        if (D(i, j) != 0 && (!best || abs(D(i, j)) < abs(D(best->i, best->j)))) {
          best = Pos{i, j};
        }
      };
      for (std::size_t i = t; i < D.rows(); ++i) {
        consider(i, t);
      }
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        consider(t, j);
      }
      return best;
    }

    struct Reducer {
      IntMatrix D;
      IntMatrix U;
      IntMatrix V;

      void move_to_pivot(Pos p, std::size_t t) {
        D.swap_rows(t, p.i);
        U.swap_rows(t, p.i);
        D.swap_cols(t, p.j);
        V.swap_cols(t, p.j);
      }

      // Returns true when row t and column t are clear apart from the pivot.
      bool clear_cross(std::size_t t) {
        bool clear = true;
        for (std::size_t i = t + 1; i < D.rows(); ++i) {
          if (D(i, t) == 0) {
            continue;
          }
          Integer q = D(i, t) / D(t, t);
          D.add_row_multiple(i, t, -q);
          U.add_row_multiple(i, t, -q);
          clear = clear && D(i, t) == 0;
        }
        for (std::size_t j = t + 1; j < D.cols(); ++j) {
          if (D(t, j) == 0) {
            continue;
          }
          Integer q = D(t, j) / D(t, t);
          D.add_col_multiple(j, t, -q);
          V.add_col_multiple(j, t, -q);
          clear = clear && D(t, j) == 0;
        }
        return clear;
      }

      std::optional<std::size_t> non_divisible_row(std::size_t t) const {
        for (std::size_t i = t + 1; i < D.rows(); ++i) {
          for (std::size_t j = t + 1; j < D.cols(); ++j) {
            if (D(i, j) % D(t, t) != 0) {
              return i;
            }
          }
        }
        return std::nullopt;
      }

      void run() {
        std::size_t const steps = std::min(D.rows(), D.cols());
        for (std::size_t t = 0; t < steps; ++t) {
          auto p = min_entry(D, t);
          if (!p) {
            break;
          }
          move_to_pivot(*p, t);
          while (true) {
            if (!clear_cross(t)) {
              move_to_pivot(*min_in_cross(D, t), t);
              continue;
            }
            if (auto i = non_divisible_row(t)) {
              D.add_row_multiple(t, *i, 1);
              U.add_row_multiple(t, *i, 1);
              continue;
            }
            break;
          }
          if (D(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
          }
        }
      }
    };
  }  // namespace

  IntVector SmithForm::diagonal() const {
    std::size_t const n = std::min(D.rows(), D.cols());
    IntVector         d(n);
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = D(i, i);
    }
    return d;
  }

  std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (auto const& x : diagonal()) {
      r += (x != 0);
    }
    return r;
  }

  SmithForm smith_normal_form(IntMatrix const& A) {
    Reducer r{A, IntMatrix::identity(A.rows()), IntMatrix::identity(A.cols())};
    r.run();
    return SmithForm{std::move(r.U), std::move(r.D), std::move(r.V)};
  }

  bool is_valid_smith_form(IntMatrix const& A, SmithForm const& s) {
    if (s.U.rows() != A.rows() || !s.U.is_square() || s.V.rows() != A.cols()
        || !s.V.is_square() || s.D.rows() != A.rows()
        || s.D.cols() != A.cols()) {
      return false;
    }
    if (abs(s.U.determinant()) != 1 || abs(s.V.determinant()) != 1) {
      return false;
    }
    if (!(s.U * A * s.V == s.D)) {
      return false;
    }
    for (std::size_t i = 0; i < s.D.rows(); ++i) {
      for (std::size_t j = 0; j < s.D.cols(); ++j) {
        if (i != j && s.D(i, j) != 0) {
          return false;
        }
      }
    }
    IntVector const d = s.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) {
        return false;
      }
      if (i + 1 < d.size()) {
        // zeros trail; a nonzero entry must divide its successor
        if (d[i] == 0 && d[i + 1] != 0) {
          return false;
        }
        if (d[i] != 0 && d[i + 1] % d[i] != 0) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace bitwist
