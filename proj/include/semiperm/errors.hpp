#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semiperm {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A raw table has the wrong shape or an entry outside [0, n).
  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  //! A table failed the associativity check; carries the failing triple.
  class NonAssociative : public Error {
   public:
    NonAssociative(std::uint32_t a, std::uint32_t b, std::uint32_t c)
        : Error("table is not associative at (" + std::to_string(a) + ", "
                + std::to_string(b) + ", " + std::to_string(c) + ")"),
          _witness{a, b, c} {}

    std::array<std::uint32_t, 3> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::array<std::uint32_t, 3> _witness;
  };

  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class SubjectMismatch : public Error {
   public:
    using Error::Error;
  };

  class BoundExceeded : public Error {
   public:
    using Error::Error;
  };

  class NotAnIdeal : public Error {
   public:
    using Error::Error;
  };

  class NotAGroup : public Error {
   public:
    using Error::Error;
  };

  class InvalidAction : public Error {
   public:
    using Error::Error;
  };

  class NotTransitive : public Error {
   public:
    using Error::Error;
  };

  class StabilizerNotContained : public Error {
   public:
    using Error::Error;
  };

  class NotCompletelySimple : public Error {
   public:
    using Error::Error;
  };

  //! The input is not of the structural form an operation requires.
  class ShapeMismatch : public Error {
   public:
    using Error::Error;
  };

  //! A structural theorem failed on a concrete input. Never swallowed.
  class InternalInconsistency : public Error {
   public:
    using Error::Error;
  };

}  // namespace semiperm
