#pragma once

#include <stdexcept>
#include <string>

namespace tdlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured size or search budget was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (cycle notation, words, corpus files, reports).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdlab
