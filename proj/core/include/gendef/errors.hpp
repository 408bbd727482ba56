#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gendef {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a file that does not parse, an invalid automaton or DAG.
/// `line()` is 0 when the error is not tied to a line of text.
class InputError : public Error {
public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// A configured size limit was exceeded (semigroup size, enumeration budget,
/// checked 64-bit arithmetic).
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string& what, std::size_t reached = 0)
      : Error(what), reached_(reached) {}

  /// Partial size reached when the limit tripped, if meaningful.
  std::size_t reached() const noexcept { return reached_; }

private:
  std::size_t reached_;
};

/// An operation was called on an argument outside its domain, e.g. a
/// construction that needs a generalized definite automaton.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// Transformations of different state-set sizes were combined.
class DimensionError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

/// A result contradicted a proven invariant. Seeing one means a bug.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace gendef
