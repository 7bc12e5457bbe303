#ifndef GAPORD_ERRORS_HPP
#define GAPORD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gapord {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ordinal layer
struct MalformedTerm : Error { using Error::Error; };
struct ZeroHasNoHead : Error { ZeroHasNoHead() : Error("cnf_head: zero has no head") {} };
struct BaseTooSmall : Error { using Error::Error; };
struct ZeroArgument : Error { using Error::Error; };
struct FiniteOverflow : Error { using Error::Error; };

// sequences and trees
struct BoundMismatch : Error { using Error::Error; };
struct BoundViolation : Error { using Error::Error; };
struct NotDominated : Error { using Error::Error; };
struct AscendingViolation : Error { using Error::Error; };
struct AlphabetMismatch : Error { using Error::Error; };

// embeddings
struct ZeroBound : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct InputOutOfRange : Error { using Error::Error; };
struct NotInfiniteBound : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct RangePropertyViolated : Error { using Error::Error; };
struct ExcludedValueInRange : Error { using Error::Error; };

// reification
struct TypeMismatch : Error { using Error::Error; };
struct DominancePreconditionViolated : Error { using Error::Error; };
struct NotBad : Error { using Error::Error; };

// harness / cli
struct UnknownSuite : Error { using Error::Error; };
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t at) : Error(what), offset(at) {}
  std::size_t offset;
};

}  // namespace gapord

#endif
