#ifndef BITWIST_BAUMSLAG_HPP_
#define BITWIST_BAUMSLAG_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bitwist/integer.hpp"

namespace bitwist {

  //! An element numerator / n^exponent of Z[1/n], kept normalized:
  //! exponent == 0 or n does not divide the numerator.
  class ZOneOverN {
   public:
    explicit ZOneOverN(long long base, Integer numerator = 0,
                       unsigned exponent = 0);

    long long      base() const noexcept { return base_; }
    Integer const& numerator() const noexcept { return numerator_; }
    unsigned       exponent() const noexcept { return exponent_; }
    bool           is_zero() const noexcept { return numerator_ == 0; }

    //! this * n^power; power may be negative.
    ZOneOverN scaled(long long power) const;

    ZOneOverN operator-() const;
    friend ZOneOverN operator+(ZOneOverN const& a, ZOneOverN const& b);
    friend ZOneOverN operator-(ZOneOverN const& a, ZOneOverN const& b);
    friend ZOneOverN operator*(ZOneOverN const& a, Integer const& c);

    friend bool operator==(ZOneOverN const&, ZOneOverN const&) = default;

    //! "5/3", "-1/4", "2"
    std::string to_string() const;

   private:
    void normalize();

    long long base_;
    Integer   numerator_;
    unsigned  exponent_;
  };

  //! The pair (x, t) in Z[1/n] x| Z with (x, r)(y, s) = (x + y / n^r, r + s).
  //! a = (0, 1), b = (1, 0).
  struct BSElement {
    ZOneOverN x;
    long long t = 0;

    long long base() const noexcept { return x.base(); }

    static BSElement identity(long long n) { return {ZOneOverN(n), 0}; }
    static BSElement a(long long n) { return {ZOneOverN(n), 1}; }
    static BSElement b(long long n) { return {ZOneOverN(n, 1), 0}; }

    friend bool operator==(BSElement const&, BSElement const&) = default;

    //! "(1/4, 0)"
    std::string to_string() const;
  };

  //! Throws BaseMismatch when the bases differ.
  BSElement bs_multiply(BSElement const& p, BSElement const& q);
  BSElement bs_inverse(BSElement const& p);
  BSElement bs_power(BSElement const& p, Integer k);

  //! A word in a and b as syllables (letter, exponent).
  struct BSWord {
    std::vector<std::pair<char, Integer>> syllables;

    //! Merges adjacent equal letters and drops zero exponents.
    BSWord normalized() const;

    friend bool operator==(BSWord const&, BSWord const&) = default;
    std::string to_string() const;
  };

  BSElement embed_word(BSWord const& w, long long n);

  //! Sum of the exponents of a; the t-component of embed_word.
  Integer a_exponent(BSWord const& w);

  //! An endomorphism given by the images of a and b.
  struct BSEndo {
    long long n;
    BSElement image_a;
    BSElement image_b;

    //! phi(x, t) for x = m / n^e, using (x, t) = a^e b^m a^-e a^t.
    BSElement apply(BSElement const& g) const;
  };

  //! Checks image_b has t = 0 (ImageOfBNotInKernel) and
  //! image_a^-1 image_b image_a = image_b^n (RelationViolated).
  BSEndo validate_bs_endo(long long n, BSElement image_a, BSElement image_b);

  //! Degree k of the induced map on the quotient by the kernel of |.|_a,
  //! the t-component of image_a.
  long long induced_degree(BSEndo const& e);

  enum class DegreeCheck { consistent, violated };

  //! With d the x-component of image_b and k the degree: n d == d n^k.
  DegreeCheck degree_constraint_check(BSEndo const& e);

  //! Certificate that R(phi, psi) is infinite for two injective-admissible
  //! endomorphisms: |.|_a is a class invariant and a^m are pairwise
  //! non-conjugate.
  struct InfinitudeCertificate {
    long long              n             = 0;
    long long              degree_phi    = 0;
    long long              degree_psi    = 0;
    std::string            invariant;
    std::vector<BSElement> witnesses;  // a^m for m in [-witness_radius, ..]
    long long              witness_radius = 0;
    std::size_t            checks_run     = 0;
    std::size_t            checks_passed  = 0;
    std::uint64_t          seed           = 0;

    bool valid() const noexcept {
      return degree_phi == degree_psi && checks_run > 0
             && checks_passed == checks_run;
    }
  };

  inline constexpr std::size_t default_certificate_checks = 1000;

  //! Throws NotInjectiveAdmissible if the image of b is trivial for either
  //! map.
  InfinitudeCertificate infinitude_certificate(
      long long n, BSEndo const& phi, BSEndo const& psi,
      std::uint64_t seed   = 0xb5,
      std::size_t   checks = default_certificate_checks);

  //! Random element with numerator in [-50, 50], exponent in [0, 4] and
  //! t in [-6, 6].
  BSElement random_bs_element(long long n, std::mt19937_64& rng);

}  // namespace bitwist

#endif  // BITWIST_BAUMSLAG_HPP_
