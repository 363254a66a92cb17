#ifndef BITWIST_ABELIAN_HPP_
#define BITWIST_ABELIAN_HPP_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bitwist/finite_group.hpp"
#include "bitwist/integer.hpp"

namespace bitwist {

  using Rational = boost::multiprecision::cpp_rational;

  //! Z_{d_1} + ... + Z_{d_k} + Z^r with d_1 | d_2 | ... | d_k, all d_i >= 2.
  //!
  //! Elements are integer vectors of length k + r; torsion coordinates are
  //! kept reduced mod d_i.
  class FgAbelianGroup {
   public:
    FgAbelianGroup() = default;
    //! Factors equal to 1 are dropped; throws InvalidInvariants if a factor
    //! is < 1 or the divisibility chain fails.
    FgAbelianGroup(IntVector invariants, std::size_t free_rank);

    IntVector const& invariants() const noexcept { return invariants_; }
    std::size_t      torsion_rank() const noexcept { return invariants_.size(); }
    std::size_t      free_rank() const noexcept { return free_rank_; }
    std::size_t      dimension() const noexcept {
      return invariants_.size() + free_rank_;
    }
    bool is_finite() const noexcept { return free_rank_ == 0; }
    //! Order of a finite group; throws Error if the free rank is positive.
    Integer order() const;

    IntVector reduce(IntVector x) const;

    //! "Z_2 + Z_4 + Z^1"; the trivial group prints as "0".
    std::string to_string() const;

    friend bool operator==(FgAbelianGroup const&,
                           FgAbelianGroup const&) = default;

   private:
    IntVector   invariants_;
    std::size_t free_rank_ = 0;
  };

  //! Endomorphism given by a square integer matrix acting on column vectors.
  class AbelianHom {
   public:
    //! Throws NotWellDefined unless the matrix respects the relations of
    //! \p g; torsion rows are reduced mod d_i.
    AbelianHom(FgAbelianGroup const& g, IntMatrix m);

    static AbelianHom identity(FgAbelianGroup const& g);
    static AbelianHom scalar(FgAbelianGroup const& g, Integer const& c);

    FgAbelianGroup const& group() const noexcept { return group_; }
    IntMatrix const&      matrix() const noexcept { return matrix_; }
    IntVector             apply(IntVector const& x) const;

    friend bool operator==(AbelianHom const&, AbelianHom const&) = default;

   private:
    FgAbelianGroup group_;
    IntMatrix      matrix_;
  };

  //! A positive count or infinity.
  struct CountOrInfinite {
    bool    infinite = false;
    Integer value;

    static CountOrInfinite infinity() { return {true, 0}; }
    std::string            to_string() const {
      return infinite ? "INFINITE" : value.str();
    }
    friend bool operator==(CountOrInfinite const&,
                           CountOrInfinite const&) = default;
  };

  //! Generators of the class of the identity, the columns of (psi - phi).
  //! Every other class is a coset of this subgroup.
  std::vector<IntVector> twisted_class_subgroup(AbelianHom const& phi,
                                                AbelianHom const& psi);

  //! Index [G : Im(psi - phi)] via the Smith form of
  //! [psi - phi | diag(d_1..d_k, 0..0)].
  CountOrInfinite reidemeister_abelian(AbelianHom const& phi,
                                       AbelianHom const& psi);

  //! The dual of a finite abelian group has the same invariant factors.
  //! Throws InfiniteDual when the free rank is positive.
  FgAbelianGroup dual_group(FgAbelianGroup const& g);

  //! Character x -> exp(2 pi i sum x_i y_i / d_i) of a finite group.
  struct DualCharacter {
    IntVector y;
    friend bool operator==(DualCharacter const&, DualCharacter const&) = default;
  };

  //! sum x_i y_i / d_i reduced into [0, 1); the exact phase of chi_y(x).
  Rational character_phase(FgAbelianGroup const& g, DualCharacter const& chi,
                           IntVector const& x);

  //! phi^ on character vectors, chosen so chi_{phi^ y}(x) = chi_y(phi x):
  //! (phi^ y)_j = sum_i M[i][j] * y_i * d_j / d_i.
  AbelianHom induced_dual_map(AbelianHom const& phi);

  //! #{y : phi^ y = psi^ y}, the order of the kernel of (phi^ - psi^) on the
  //! dual, computed from an integer kernel basis of [N | diag(d)].
  Integer dual_coincidence_count(AbelianHom const& phi, AbelianHom const& psi);

  ////////////////////////////////////////////////////////////////////////
  // Realization as a FiniteGroup
  ////////////////////////////////////////////////////////////////////////

  //! Mixed-radix index of a reduced element (first coordinate fastest).
  std::size_t element_index(FgAbelianGroup const& g, IntVector const& x);
  IntVector   element_vector(FgAbelianGroup const& g, std::size_t index);

  //! The finite group as a multiplication table; elements are named by
  //! their coordinate vectors. Throws Error if the free rank is positive.
  FiniteGroup realize(FgAbelianGroup const& g);
  GroupMap    realize(FiniteGroup const& realized, AbelianHom const& phi);

  struct BfReport {
    std::string group;
    Integer     orbit_count;     // brute-force classes
    Integer     index;           // Smith form index
    Integer     coincidences;    // dual kernel order
    bool        pass = false;
    std::string detail;
  };

  //! Compares the three independent computations on a finite group.
  BfReport verify_bitwisted_bf(AbelianHom const& phi, AbelianHom const& psi);

  //! Every invariant-factor shape with product \p n, in lexicographic order.
  std::vector<FgAbelianGroup> abelian_groups_of_order(unsigned n);

  //! Uniform random well-defined endomorphism; free-part entries in [-3, 3].
  AbelianHom random_endomorphism(FgAbelianGroup const& g, std::mt19937_64& rng);

}  // namespace bitwist

#endif  // BITWIST_ABELIAN_HPP_
