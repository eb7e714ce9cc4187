#ifndef GMCLONE_ERRORS_HPP
#define GMCLONE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmclone {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Amplitudes that cannot describe a physical state (zero norm, NaN, ...).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Symmetric component of a state vanished under projection.
class ZeroProjectionError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a size guard (2^n amplitudes, 2^n file lines, ...).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Indicates a bug, never bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class MalformedMpsError : public Error {
 public:
  using Error::Error;
};

/// Every singular value at some cut fell below the truncation threshold.
class DegenerateStateError : public Error {
 public:
  using Error::Error;
};

/// Malformed stage or export file. `line()` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace gmclone

#endif  // GMCLONE_ERRORS_HPP
