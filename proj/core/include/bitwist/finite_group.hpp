#ifndef BITWIST_FINITE_GROUP_HPP_
#define BITWIST_FINITE_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bitwist {

  //! Index of an element of a FiniteGroup. Element 0 is always the identity.
  using Element = std::uint32_t;

  //! Permutation of {0, ..., degree-1} given by its image list.
  using Permutation = std::vector<std::uint32_t>;

  inline constexpr std::size_t default_closure_cap = 20000;

  //! A finite group stored as a full multiplication table.
  //!
  //! Construction checks the group axioms: the table is a Latin square,
  //! element 0 is a two-sided identity, and associativity holds (Light's
  //! test against a generating set, which is exhaustive for finite magmas).
  //! Instances are immutable.
  class FiniteGroup {
   public:
    using GeneratorLabel = std::pair<std::string, Element>;

    //! \p table is row-major with order*order entries, table[x*order+y] = xy.
    static FiniteGroup from_table(std::size_t                 order,
                                  std::vector<Element>        table,
                                  std::vector<GeneratorLabel> generators = {},
                                  std::vector<std::string> element_names = {});

    std::size_t order() const noexcept { return order_; }
    Element     identity() const noexcept { return 0; }

    Element mul(Element x, Element y) const noexcept {
      return table_[static_cast<std::size_t>(x) * order_ + y];
    }
    Element inv(Element x) const noexcept { return inverse_[x]; }

    //! Generating set; user labels when supplied, otherwise g1, g2, ...
    std::vector<GeneratorLabel> const& generators() const noexcept {
      return generators_;
    }
    std::span<Element const> table() const noexcept { return table_; }

    //! Display name of an element (cycle notation, coordinate vector, ...);
    //! falls back to the index.
    std::string element_name(Element x) const;

    bool        is_abelian() const;
    std::size_t element_order(Element x) const;

    friend bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
      return a.order_ == b.order_ && a.table_ == b.table_;
    }

   private:
    FiniteGroup() = default;

    std::size_t                 order_ = 0;
    std::vector<Element>        table_;
    std::vector<Element>        inverse_;
    std::vector<GeneratorLabel> generators_;
    std::vector<std::string>    names_;
  };

  //! Group generated by \p generators under composition (apply left factor
  //! first). Element 0 is the identity; generators are labelled g1, g2, ...
  FiniteGroup group_from_permutations(std::vector<Permutation> const& generators,
                                      std::size_t cap = default_closure_cap);

  std::string cycle_notation(Permutation const& p);

  //! A map between finite groups given by its image table.
  class GroupMap {
   public:
    GroupMap(std::size_t codomain_order, std::vector<Element> image);

    static GroupMap identity(FiniteGroup const& g);
    //! Every element to the identity of \p codomain.
    static GroupMap trivial(FiniteGroup const& domain,
                            FiniteGroup const& codomain);

    Element operator()(Element x) const noexcept { return image_[x]; }

    std::size_t domain_order() const noexcept { return image_.size(); }
    std::size_t codomain_order() const noexcept { return codomain_order_; }
    std::vector<Element> const& image() const noexcept { return image_; }

    bool is_validated() const noexcept { return validated_; }
    bool is_bijective() const noexcept { return bijective_; }

    friend bool operator==(GroupMap const& a, GroupMap const& b) {
      return a.codomain_order_ == b.codomain_order_ && a.image_ == b.image_;
    }

   private:
    friend GroupMap validate_homomorphism(FiniteGroup const&,
                                          FiniteGroup const&, GroupMap);

    std::size_t          codomain_order_;
    std::vector<Element> image_;
    bool                 validated_ = false;
    bool                 bijective_ = false;
  };

  //! Full pairwise homomorphism check; throws NotHomomorphism naming the first
  //! violating pair (x, y) in row-major order, or InvalidMap on bad shape.
  GroupMap validate_homomorphism(FiniteGroup const& domain,
                                 FiniteGroup const& codomain,
                                 GroupMap           m);

  //! Extends images of the generators of \p domain to a validated
  //! homomorphism, or throws NotHomomorphism.
  GroupMap extend_from_generators(FiniteGroup const&          domain,
                                  FiniteGroup const&          codomain,
                                  std::vector<Element> const& generator_images);

  //! x -> g x g^-1
  GroupMap inner_automorphism(FiniteGroup const& g, Element conjugator);

  //! Every automorphism of \p g, identity first, found by extending all
  //! order-preserving generator assignments.
  std::vector<GroupMap> automorphisms(FiniteGroup const& g);

  //! Composition (outer after inner), both endomorphisms of one group.
  GroupMap compose(GroupMap const& outer, GroupMap const& inner);

  //! Partition of a group into (phi, psi)-twisted conjugacy classes.
  struct TwistedPartition {
    std::vector<std::vector<Element>> classes;
    std::vector<Element>              reps;
    std::vector<std::size_t>          class_of;

    std::size_t size() const noexcept { return classes.size(); }
  };

  //! Orbits of gamma . x = psi(gamma) x phi(gamma)^-1, ordered by minimal
  //! representative; each class is sorted.
  TwistedPartition twisted_classes(FiniteGroup const& g,
                                   GroupMap const&    phi,
                                   GroupMap const&    psi);

  std::size_t reidemeister_number(FiniteGroup const& g,
                                  GroupMap const&    phi,
                                  GroupMap const&    psi);

  //! Least-index gamma with y = psi(gamma) x phi(gamma)^-1.
  std::optional<Element> is_twisted_conjugate(FiniteGroup const& g,
                                              GroupMap const&    phi,
                                              GroupMap const&    psi,
                                              Element            x,
                                              Element            y);

  //! Ordinary conjugacy classes, i.e. twisted classes for (id, id).
  TwistedPartition conjugacy_classes(FiniteGroup const& g);

}  // namespace bitwist

#endif  // BITWIST_FINITE_GROUP_HPP_
