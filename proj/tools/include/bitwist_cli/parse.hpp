#ifndef BITWIST_CLI_PARSE_HPP_
#define BITWIST_CLI_PARSE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitwist/abelian.hpp"
#include "bitwist/baumslag.hpp"
#include "bitwist/errors.hpp"
#include "bitwist/finite_group.hpp"
#include "bitwist/integer.hpp"
#include "bitwist/polycyclic.hpp"

namespace bitwist::cli {

  //! Anything wrong with user input; maps to exit code 2.
  class InputError : public Error {
    using Error::Error;
  };

  class ParseError : public InputError {
   public:
    ParseError(std::size_t line, std::size_t column, std::string expected,
               std::string found = {});

    std::size_t        line() const noexcept { return line_; }
    std::size_t        column() const noexcept { return column_; }
    std::string const& expected() const noexcept { return expected_; }

   private:
    std::size_t line_;
    std::size_t column_;
    std::string expected_;
  };

  class UnknownGenerator : public ParseError {
   public:
    UnknownGenerator(std::size_t line, std::size_t column, std::string label,
                     std::string expected);
    std::string const& label() const noexcept { return label_; }

   private:
    std::string label_;
  };

  class MalformedExponent : public ParseError {
    using ParseError::ParseError;
  };

  //! A syntactically fine spec rejected by the library; what() carries the
  //! library's message.
  class ValidationError : public InputError {
    using InputError::InputError;
  };

  ////////////////////////////////////////////////////////////////////////
  // Group specifications
  ////////////////////////////////////////////////////////////////////////

  enum class GroupKind { finite_perm, finite_table, abelian, bs, poly };

  std::string to_string(GroupKind k);

  struct GroupSpec {
    GroupKind kind = GroupKind::abelian;

    // finite-perm
    std::size_t              degree = 0;
    std::vector<Permutation> generators;
    // finite-table
    std::size_t          order = 0;
    std::vector<Element> table;
    // abelian
    IntVector   invariants;
    std::size_t rank = 0;
    // bs
    long long n = 0;
    // poly
    IntMatrix action;

    //! Canonical one-line form, e.g. "group bs n=2"; parses back to an equal
    //! spec.
    std::string to_string() const;
    friend bool operator==(GroupSpec const&, GroupSpec const&) = default;

    bool is_finite() const noexcept {
      return kind == GroupKind::finite_perm || kind == GroupKind::finite_table;
    }
  };

  //! Parses and validates. Throws ParseError (with line, column and the
  //! expected tokens) or ValidationError.
  GroupSpec parse_group_spec(std::string const& text);

  FiniteGroup    build_finite(GroupSpec const& spec);
  FgAbelianGroup build_abelian(GroupSpec const& spec);
  PolyGroup      build_poly(GroupSpec const& spec);

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  struct WordExpr {
    std::vector<std::pair<std::string, Integer>> syllables;

    //! "a^2 b a^-2"; the empty word prints as "1".
    std::string to_string() const;
    friend bool operator==(WordExpr const&, WordExpr const&) = default;
  };

  //! word := term+ ; term := label ('^' '-'? digits)? ; label := letter+.
  //! Adjacent equal labels are merged and zero exponents dropped. The lone
  //! token "1" denotes the empty word.
  WordExpr parse_word(std::string const&              text,
                      std::vector<std::string> const& generators);

  BSWord to_bs_word(WordExpr const& w);

  ////////////////////////////////////////////////////////////////////////
  // Maps and elements
  ////////////////////////////////////////////////////////////////////////

  //! "id", "trivial", "images=[..]", "gens=[..]" (element indices or cycle
  //! notation) or "inner=k".
  GroupMap parse_finite_map(std::string const& text, FiniteGroup const& g);

  //! "id", "trivial", an integer scalar, or a matrix "[[..],[..]]"; a flat
  //! list is read row-major.
  AbelianHom parse_abelian_map(std::string const& text, FgAbelianGroup const& g);

  //! "id" or "a=<word>; b=<word>".
  BSEndo parse_bs_map(std::string const& text, long long n);

  //! "id" or "M=[[..]] eps=-1 u=[..]" (eps and u optional).
  PolyAuto parse_poly_map(std::string const& text, PolyGroup const& g);

  //! "((1,0),2)" or a word over x, y, z, w (the fiber basis) and t.
  PolyElement parse_poly_element(std::string const& text, PolyGroup const& g);

  IntMatrix parse_matrix(std::string const& text);

}  // namespace bitwist::cli

#endif  // BITWIST_CLI_PARSE_HPP_
