#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logizono {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on vector or matrix dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured factor or point cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed expression text. Column is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(message), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A model document that parses but fails validation.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// The LFSR key search found no key reproducing the ciphertext.
class SearchFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace logizono
