#ifndef BITWIST_ERRORS_HPP_
#define BITWIST_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bitwist {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // core

  class ClosureExceeded : public Error {
   public:
    explicit ClosureExceeded(std::size_t cap)
        : Error("permutation closure exceeded cap of " + std::to_string(cap)
                + " elements"),
          cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

   private:
    std::size_t cap_;
  };

  class InvalidPermutation : public Error {
   public:
    using Error::Error;
  };

  //! The multiplication table handed to FiniteGroup is not a group.
  class InvalidGroupTable : public Error {
   public:
    using Error::Error;
  };

  class NotHomomorphism : public Error {
   public:
    NotHomomorphism(std::size_t x, std::size_t y)
        : Error("map is not a homomorphism: image(" + std::to_string(x) + "*"
                + std::to_string(y) + ") != image(" + std::to_string(x)
                + ")*image(" + std::to_string(y) + ")"),
          x_(x),
          y_(y) {}
    std::size_t x() const noexcept { return x_; }
    std::size_t y() const noexcept { return y_; }

   private:
    std::size_t x_;
    std::size_t y_;
  };

  //! Malformed map table (wrong length, entries out of range).
  class InvalidMap : public Error {
   public:
    using Error::Error;
  };

  // abelian

  class InvalidInvariants : public Error {
   public:
    using Error::Error;
  };

  class NotWellDefined : public Error {
   public:
    using Error::Error;
  };

  class InfiniteDual : public Error {
   public:
    InfiniteDual()
        : Error("dual of a group with positive free rank is not discrete") {}
  };

  // chartab

  class InconsistentClassAlgebra : public Error {
   public:
    using Error::Error;
  };

  class DegenerateCombination : public Error {
   public:
    using Error::Error;
  };

  class ToleranceExceeded : public Error {
   public:
    using Error::Error;
  };

  class NoMatchingRow : public Error {
   public:
    using Error::Error;
  };

  class NotAutomorphism : public Error {
   public:
    using Error::Error;
  };

  // baumslag

  class BaseMismatch : public Error {
   public:
    BaseMismatch(long long n1, long long n2)
        : Error("base mismatch: " + std::to_string(n1) + " vs "
                + std::to_string(n2)) {}
  };

  class RelationViolated : public Error {
   public:
    using Error::Error;
  };

  class ImageOfBNotInKernel : public Error {
   public:
    using Error::Error;
  };

  class NotInjectiveAdmissible : public Error {
   public:
    using Error::Error;
  };

  // polycyclic

  class DimensionMismatch : public Error {
   public:
    using Error::Error;
  };

  class NotCompatible : public Error {
   public:
    using Error::Error;
  };

  class NotUnimodular : public Error {
   public:
    using Error::Error;
  };

  //! The congruence quotient is not invariant under one of the maps; the
  //! caller skips this modulus.
  class DoesNotRespect : public Error {
   public:
    DoesNotRespect(std::string which, std::string generator)
        : Error(which + " does not descend: image of kernel generator "
                + generator + " is nontrivial in the quotient"),
          which_(std::move(which)),
          generator_(std::move(generator)) {}
    std::string const& which() const noexcept { return which_; }
    std::string const& generator() const noexcept { return generator_; }

   private:
    std::string which_;
    std::string generator_;
  };

}  // namespace bitwist

#endif  // BITWIST_ERRORS_HPP_
