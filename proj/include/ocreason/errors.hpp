#pragma once

#include <stdexcept>
#include <string>

namespace ocreason {

// Malformed input: unknown ids, mismatched dimensions, bad file contents.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The inputs are well formed but an operation's precondition does not hold
// (an assumption is inapplicable, a supplied certificate fails, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ocreason
