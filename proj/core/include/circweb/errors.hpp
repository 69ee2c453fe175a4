#pragma once

#include <stdexcept>
#include <string>

namespace circweb {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a point leaves the regular domain of a formula.
struct DomainError : Error {
  using Error::Error;
};
struct DiscriminantError : DomainError {
  using DomainError::DomainError;
};
struct DegenerateError : DomainError {
  using DomainError::DomainError;
};
struct VerticalSlopeError : DomainError {
  using DomainError::DomainError;
};
struct BaseLocusError : DomainError {
  using DomainError::DomainError;
};
struct DegenerateWebError : DomainError {
  using DomainError::DomainError;
};
struct SingularSolveError : DomainError {
  using DomainError::DomainError;
};
struct ComplexBranchError : DomainError {
  using DomainError::DomainError;
};
struct FixedLocusError : DomainError {
  using DomainError::DomainError;
};

struct SouthPoleError : Error {
  using Error::Error;
};
struct InsideQuadricError : Error {
  using Error::Error;
};
struct OnQuadricError : Error {
  using Error::Error;
};
struct CoincidentPointsError : Error {
  using Error::Error;
};
struct ZeroGeneratorError : Error {
  using Error::Error;
};
struct InfinityError : Error {
  using Error::Error;
};
struct NotTangentError : Error {
  using Error::Error;
};
struct NoRealTangentsError : Error {
  using Error::Error;
};

struct UnknownIdError : Error {
  using Error::Error;
};
struct ParamRangeError : Error {
  using Error::Error;
};
struct DegenerateParamError : Error {
  using Error::Error;
};
struct EmptyWindowError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace circweb
