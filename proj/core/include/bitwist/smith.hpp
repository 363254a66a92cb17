#ifndef BITWIST_SMITH_HPP_
#define BITWIST_SMITH_HPP_

#include <cstddef>

#include "bitwist/integer.hpp"

namespace bitwist {

  //! Smith normal form U * A * V = D of an integer matrix A.
  //!
  //! U and V are unimodular, D has the shape of A, is zero off the diagonal,
  //! and its diagonal is nonnegative with d_0 | d_1 | ... (zeros trail).
  struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    IntVector   diagonal() const;
    std::size_t rank() const;
  };

  SmithForm smith_normal_form(IntMatrix const& A);

  //! Checks U*A*V == D, |det U| == |det V| == 1, diagonal shape and the
  //! divisibility chain. Used by tests and the CLI.
  bool is_valid_smith_form(IntMatrix const& A, SmithForm const& s);

}  // namespace bitwist

#endif  // BITWIST_SMITH_HPP_
