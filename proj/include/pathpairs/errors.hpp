#pragma once

#include <stdexcept>
#include <string>

namespace pathpairs {

// Structurally nonsensical input: k < 2, negative counts, malformed paths.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters outside the range where a formula or construction is valid.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An epsilon decomposition that violates its invariants.
class SplitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Caller-side precondition violations that are not domain errors
// (e.g. a weak query with delta = 0 but epsilon > 0).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pathpairs
