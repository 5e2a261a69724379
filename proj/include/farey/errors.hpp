#pragma once

#include <stdexcept>
#include <string>

namespace farey {

// Two families: domain errors (bad input, violated precondition) and
// resource errors (a configured cap was hit). The CLI maps them to exit
// codes 1 and 2.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyLadder : public DomainError {
 public:
  EmptyLadder() : DomainError("ladder endpoints are equal") {}
};

class DegenerateLadder : public DomainError {
 public:
  DegenerateLadder() : DomainError("ladder endpoints are adjacent; no triangle is crossed") {}
};

class SpineUndefined : public DomainError {
 public:
  explicit SpineUndefined(std::size_t triangles)
      : DomainError("spine needs at least three triangles, ladder has " + std::to_string(triangles)) {}
};

class OutOfBound : public DomainError {
 public:
  using DomainError::DomainError;
};

class LadderTooLarge : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class EnumerationOverflow : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

class OracleBudget : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace farey
