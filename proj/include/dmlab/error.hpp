#pragma once

#include <stdexcept>
#include <string>

namespace dmlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6 lines, JSON documents, profile strings).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with arguments that violate its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The request lies outside the range an algorithm is guaranteed for.
class RangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace dmlab
