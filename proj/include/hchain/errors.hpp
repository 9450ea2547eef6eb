#pragma once

#include <stdexcept>
#include <string>

namespace hchain {

// Root of every exception thrown by the library. The CLI turns any of these
// into exit status 2 with the message as diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lengths or shapes of arguments do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A value lies outside the domain of an operation (t <= 0, alpha outside H, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A checked precondition on the mathematical input failed (e.g. a chain that
// is not semistable handed to graduation).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Request outside what is implemented: non-rank-one types, small-degree regime
// for GIT quotients.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hchain
