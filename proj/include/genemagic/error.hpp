#pragma once

#include <stdexcept>
#include <string>

namespace genemagic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: bad letter, bad header, bad token.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Dimensions that do not fit together (ragged rows, non-dividing blocks, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value outside the range the library can represent exactly.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An argument outside the domain of an operation (e.g. repeated letters
/// where four distinct bases are required).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input data missing something the operation needs, or duplicated.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition on the input does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace genemagic
