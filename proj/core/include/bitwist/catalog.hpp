#ifndef BITWIST_CATALOG_HPP_
#define BITWIST_CATALOG_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "bitwist/finite_group.hpp"

namespace bitwist::catalog {

  // Small permutation groups used by the tests, benchmarks and the CLI.

  FiniteGroup cyclic(std::size_t n);
  FiniteGroup symmetric(std::size_t n);
  FiniteGroup alternating(std::size_t n);
  //! Dihedral group of order 2n acting on an n-gon.
  FiniteGroup dihedral(std::size_t n);
  //! Quaternion group of order 8 in its regular representation.
  FiniteGroup quaternion();

  //! Looks up "S3", "D4" (order 8), "D6" (order 12), "Q8", "A4", "C5", ...
  FiniteGroup by_name(std::string const& name);

  //! The groups used to check the automorphism case: S3, D4, Q8, A4, D6.
  std::vector<std::pair<std::string, FiniteGroup>> automorphism_suite();

}  // namespace bitwist::catalog

#endif  // BITWIST_CATALOG_HPP_
