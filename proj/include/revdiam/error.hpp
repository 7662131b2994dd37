#pragma once

#include <stdexcept>
#include <string>

namespace revdiam {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value handed to an operation violates its precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Target diameter below 2; the decision problem is only posed for d >= 2.
class DiameterBelowTwo : public InvalidArgument {
 public:
  DiameterBelowTwo() : InvalidArgument("target diameter must be at least 2") {}
};

/// An exhaustive routine was asked to run past its configured size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input is not a cactus (two cycles share two or more vertices).
class NotCactus : public Error {
 public:
  using Error::Error;
};

/// Malformed instance/witness files.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace revdiam
