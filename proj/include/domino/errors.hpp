#pragma once

#include <stdexcept>
#include <string>

namespace domino {

/// Base class for every failure reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A floating-point closed form could not be rounded to an exact integer.
class NumericInstability : public Error {
 public:
  using Error::Error;
};

/// The requested flip is not available on the given tiling.
class InvalidMove : public Error {
 public:
  using Error::Error;
};

/// The operation needs a simply connected region.
class UnsupportedRegion : public Error {
 public:
  using Error::Error;
};

/// A vertex labelling that is not the height function of any tiling.
class InvalidHeight : public Error {
 public:
  using Error::Error;
};

class Untileable : public Error {
 public:
  using Error::Error;
};

/// A configured budget (flip-graph nodes, search steps, profile width) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON documents or shape strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace domino
