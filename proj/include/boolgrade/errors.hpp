#pragma once

#include <stdexcept>
#include <string>

namespace boolgrade {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two operands live in symmetric groups of different degree.
class DegreeMismatch : public InvalidArgument {
 public:
  DegreeMismatch(int a, int b)
      : InvalidArgument("degree mismatch: " + std::to_string(a) + " vs " +
                        std::to_string(b)) {}
};

/// A configured enumeration cap was hit. Never a silent truncation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace boolgrade
