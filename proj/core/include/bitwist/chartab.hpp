#ifndef BITWIST_CHARTAB_HPP_
#define BITWIST_CHARTAB_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bitwist/finite_group.hpp"

namespace bitwist {

  //! Conjugacy classes of a finite group; class 0 is {identity}.
  struct ClassData {
    std::vector<std::vector<Element>> classes;
    std::vector<std::size_t>          sizes;
    std::vector<Element>              reps;
    std::vector<std::size_t>          class_of;

    std::size_t size() const noexcept { return classes.size(); }
  };

  ClassData class_data(FiniteGroup const& g);

  //! Structure constants a[i][j][k] = #{(x, y) in C_i x C_j : xy = z} for a
  //! fixed z in C_k, i.e. K_i K_j = sum_k a[i][j][k] K_k.
  class ClassAlgebra {
   public:
    explicit ClassAlgebra(std::size_t r) : r_(r), a_(r * r * r, 0) {}

    std::size_t    size() const noexcept { return r_; }
    std::uint64_t& operator()(std::size_t i, std::size_t j, std::size_t k) {
      return a_[(i * r_ + j) * r_ + k];
    }
    std::uint64_t operator()(std::size_t i, std::size_t j,
                             std::size_t k) const {
      return a_[(i * r_ + j) * r_ + k];
    }

   private:
    std::size_t                r_;
    std::vector<std::uint64_t> a_;
  };

  //! Throws InconsistentClassAlgebra if a count depends on the choice of z.
  ClassAlgebra class_mult_coefficients(FiniteGroup const& g,
                                       ClassData const&   classes);

  //! Irreducible complex characters; values[i][j] is character i on class j.
  //! Rows are ordered trivial character first, then by degree and values.
  struct CharacterTable {
    ClassData                                      classes;
    std::vector<std::vector<std::complex<double>>> values;
    std::vector<long>                              degrees;
    double row_residual    = 0.0;  // max |<chi_i, chi_j> - delta_ij|
    double column_residual = 0.0;  // normalized column orthogonality
    unsigned attempts      = 0;    // random combinations tried

    std::size_t size() const noexcept { return values.size(); }
  };

  inline constexpr double   character_tolerance      = 1e-8;
  inline constexpr double   row_match_tolerance      = 1e-6;
  inline constexpr unsigned character_retry_budget   = 16;
  inline constexpr std::uint64_t default_character_seed = 0x5eed;

  //! Characters as simultaneous eigenvectors of the class-sum matrices,
  //! taken from one random real combination of them.
  //!
  //! Throws DegenerateCombination after character_retry_budget combinations
  //! with repeated eigenvalues, and ToleranceExceeded if orthogonality or the
  //! integrality of the degrees fails.
  CharacterTable character_table(FiniteGroup const& g,
                                 std::uint64_t seed = default_character_seed);

  //! Class j is sent to class result[j] by the automorphism.
  std::vector<std::size_t> class_permutation(FiniteGroup const& g,
                                             ClassData const&   classes,
                                             GroupMap const&    alpha);

  //! sigma with chi_i o alpha = chi_{sigma(i)}. Throws NotAutomorphism for
  //! a non-bijective map and NoMatchingRow if a row cannot be matched.
  std::vector<std::size_t> dual_action(FiniteGroup const&    g,
                                       CharacterTable const& table,
                                       GroupMap const&       alpha);

  //! #{chi : chi o phi = chi o psi} for automorphisms, via dual_action.
  std::size_t coincidence_count_dual(FiniteGroup const&    g,
                                     CharacterTable const& table,
                                     GroupMap const&       phi,
                                     GroupMap const&       psi);

  //! Same count compared as class functions; valid for any endomorphisms
  //! since characters determine representations up to equivalence.
  std::size_t coincidence_count_values(FiniteGroup const&    g,
                                       CharacterTable const& table,
                                       GroupMap const&       phi,
                                       GroupMap const&       psi);

  struct CompactBfReport {
    std::size_t reidemeister = 0;
    std::size_t coincidences = 0;
    bool        pass         = false;
  };

  CompactBfReport verify_compact_bf(FiniteGroup const&    g,
                                    CharacterTable const& table,
                                    GroupMap const&       phi,
                                    GroupMap const&       psi);

  //! Twisted classes of the trivial endomorphism pair against the dual.
  struct CounterexampleReport {
    std::size_t order        = 0;
    std::size_t reidemeister = 0;  // R(trivial, trivial)
    std::size_t coincidences = 0;  // #Coin
    std::size_t dual_size    = 0;  // #irreducible characters
    bool        abelian      = false;
    bool        inequality   = false;  // R != #Coin
    bool        pass         = false;  // inequality iff nonabelian
  };

  CounterexampleReport counterexample_report(FiniteGroup const&    g,
                                             CharacterTable const& table);

}  // namespace bitwist

#endif  // BITWIST_CHARTAB_HPP_
