#pragma once

#include <stdexcept>
#include <string>

namespace dgcm {

// Malformed input (file syntax, schema, index ranges).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition
// (not a GCM, not a height function, non-reduced word, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal identity failed to hold. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dgcm
