#pragma once

#include <stdexcept>
#include <string>

namespace aeup {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the documented range of an operation.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// A size guard (dense enumeration, subset count, cubic loop) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An input set lacks required algebraic structure (e.g. not a subgroup).
class StructureError : public Error {
 public:
  using Error::Error;
};

// The inputs describe an impossible configuration for the formula requested.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed file content.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace aeup
