#pragma once

#include <stdexcept>
#include <string>

namespace affcrit {

// Raised when an operation is called outside its domain (noncritical weight
// where critical is required, weight outside the window, invalid rank, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed textual input (weights, rationals, Cartan type names).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer coefficient left the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace affcrit
