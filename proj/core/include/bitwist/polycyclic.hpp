#ifndef BITWIST_POLYCYCLIC_HPP_
#define BITWIST_POLYCYCLIC_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bitwist/finite_group.hpp"
#include "bitwist/integer.hpp"

namespace bitwist {

  //! Z^d x|_A Z with (v, t)(w, s) = (v + A^t w, t + s); A is unimodular.
  class PolyGroup {
   public:
    //! Throws NotUnimodular unless A is square with det A = +-1.
    explicit PolyGroup(IntMatrix action);

    std::size_t      dimension() const noexcept { return action_.rows(); }
    IntMatrix const& action() const noexcept { return action_; }
    IntMatrix const& action_inverse() const noexcept { return inverse_; }
    //! A^t for any integer t (cached for small |t|).
    IntMatrix power(long long t) const;

   private:
    IntMatrix              action_;
    IntMatrix              inverse_;
    std::vector<IntMatrix> positive_;  // A^0 .. A^cache
    std::vector<IntMatrix> negative_;  // A^0 .. A^-cache
  };

  struct PolyElement {
    IntVector v;
    long long t = 0;

    static PolyElement identity(std::size_t d) { return {IntVector(d), 0}; }

    friend bool operator==(PolyElement const&, PolyElement const&) = default;
    //! "((1,0),0)"
    std::string to_string() const;
  };

  //! Throws DimensionMismatch.
  PolyElement poly_multiply(PolyGroup const& g, PolyElement const& p,
                            PolyElement const& q);
  PolyElement poly_inverse(PolyGroup const& g, PolyElement const& p);
  PolyElement poly_power(PolyGroup const& g, PolyElement const& p, long long k);

  //! Fibered automorphism: (v, 0) -> (M v, 0) and (0, 1) -> (u, eps).
  struct PolyAuto {
    IntMatrix M;
    int       eps = 1;
    IntVector u;

    //! phi(v, t) = (M v, 0) * (u, eps)^t
    PolyElement apply(PolyGroup const& g, PolyElement const& p) const;

    static PolyAuto identity(PolyGroup const& g);
    std::string     to_string() const;
  };

  //! Checks |det M| = 1 (NotUnimodular) and M A = A^eps M (NotCompatible).
  PolyAuto validate_poly_auto(PolyGroup const& g, IntMatrix M, int eps,
                              IntVector u);

  //! Multiplicative order of A in GL_d(Z/m).
  long long order_mod(IntMatrix const& A, long long m);

  //! The finite quotient (Z/m)^d x| Z/L with L the order of A mod m,
  //! together with the maps induced by phi and psi.
  class CongruenceQuotient {
   public:
    long long          modulus() const noexcept { return modulus_; }
    long long          period() const noexcept { return period_; }
    FiniteGroup const& group() const noexcept { return group_; }
    GroupMap const&    phi() const noexcept { return phi_; }
    GroupMap const&    psi() const noexcept { return psi_; }

    Element     project(PolyElement const& p) const;
    //! Representative with v in [0, m)^d and t in [0, L).
    PolyElement lift(Element x) const;

   private:
    friend CongruenceQuotient congruence_quotient(PolyGroup const&, long long,
                                                  PolyAuto const&,
                                                  PolyAuto const&);
    CongruenceQuotient(long long m, long long period, std::size_t d,
                       FiniteGroup group, GroupMap phi, GroupMap psi);

    long long   modulus_;
    long long   period_;
    std::size_t dimension_;
    FiniteGroup group_;
    GroupMap    phi_;
    GroupMap    psi_;
  };

  //! Throws DoesNotRespect if the kernel of the projection is not mapped
  //! into itself by phi or psi; the caller skips such a modulus.
  CongruenceQuotient congruence_quotient(PolyGroup const& g, long long m,
                                         PolyAuto const& phi,
                                         PolyAuto const& psi);

  ////////////////////////////////////////////////////////////////////////
  // Decision procedure
  ////////////////////////////////////////////////////////////////////////

  struct DecisionBudget {
    int       shells      = 5;   // shells of radius 0 .. shells-1
    long long max_modulus = 16;  // moduli 2 .. max_modulus
    //! Keep running after the first certified answer and record every
    //! witness and separation (used to cross-check the two streams).
    bool exhaustive = false;
  };

  enum class Verdict { yes, no, exhausted };
  std::string to_string(Verdict v);

  struct TranscriptStep {
    std::string stream;  // "shell" or "modulus"
    long long   value = 0;
    std::string outcome;  // "witness", "none", "separated", "not-separated",
                          // "skipped"
    std::string detail;
    std::optional<PolyElement> witness;
    std::size_t                quotient_order = 0;
  };

  struct Decision {
    Verdict                    verdict = Verdict::exhausted;
    std::optional<PolyElement> witness;
    std::optional<long long>   modulus;
    std::vector<TranscriptStep> transcript;
  };

  //! Is there gamma with psi(gamma) U phi(gamma)^-1 = V?
  //!
  //! Alternates one shell of the exhaustive search for gamma (infinity norm
  //! over (v, t), lexicographic within a shell) with one modulus m = 2, 3,
  //! ..., whose congruence quotient separates U and V if their projections
  //! lie in different twisted classes. Both answers carry certificates.
  Decision decide_twisted_conjugacy(PolyGroup const& g, PolyAuto const& phi,
                                    PolyAuto const& psi, PolyElement const& U,
                                    PolyElement const& V,
                                    DecisionBudget const& budget);

  //! Elements with max(|v|_inf, |t|) == radius in lexicographic order.
  std::vector<PolyElement> shell(std::size_t d, long long radius);

  //! Re-checks a decision: the witness relation for YES, quotient
  //! separation for NO.
  bool verify_decision(PolyGroup const& g, PolyAuto const& phi,
                       PolyAuto const& psi, PolyElement const& U,
                       PolyElement const& V, Decision const& d);

  struct QuotientBoundRow {
    long long   modulus  = 0;
    bool        respects = false;
    std::size_t order    = 0;
    std::size_t classes  = 0;
    std::string reason;
  };

  struct QuotientBound {
    std::size_t                   bound = 0;
    std::vector<QuotientBoundRow> table;
    //! First modulus at which the bound was attained, and the number of
    //! respecting moduli after it that did not raise it.
    std::optional<long long> attained_at;
    std::size_t              stable_tail = 0;
  };

  //! Each respecting quotient's class count is a lower bound for R.
  QuotientBound quotient_class_lower_bound(PolyGroup const& g,
                                           PolyAuto const&  phi,
                                           PolyAuto const&  psi,
                                           std::vector<long long> const& moduli);

  //! All M with entries in [-bound, bound], |det M| = 1 and M A = A^eps M.
  std::vector<IntMatrix> compatible_matrices(PolyGroup const& g, int eps,
                                             long long bound);

  PolyElement random_poly_element(std::size_t d, long long radius,
                                  std::mt19937_64& rng);

}  // namespace bitwist

#endif  // BITWIST_POLYCYCLIC_HPP_
