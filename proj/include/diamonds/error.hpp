#pragma once

#include <stdexcept>
#include <string>

namespace diamonds {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidPermutation : public Error {
 public:
  using Error::Error;
};

class DuplicateEntries : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

class PosetViolation : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeUnsupported : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class Not132Avoider : public Error {
 public:
  using Error::Error;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

}  // namespace diamonds
