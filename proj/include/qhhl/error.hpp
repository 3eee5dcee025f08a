#pragma once

#include <stdexcept>
#include <string>

namespace qhhl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A mathematical precondition was violated (non-Hermitian input,
/// non-positive-definite matrix, zero vector, invalid qudit level, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A structural or configuration precondition was violated (register shape
/// mismatch, wire index out of range, eigenphase outside the resolvable
/// window, unsupported dimension, ...).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// An input file could not be parsed.  Carries the 1-based line number of the
/// offending line; the message already includes "path:line:".
class ParseError : public Error {
public:
  ParseError(const std::string& path, int line, const std::string& msg)
      : Error(path + ":" + std::to_string(line) + ": " + msg),
        path_(path), line_(line) {}
  const std::string& path() const { return path_; }
  int line() const { return line_; }

private:
  std::string path_;
  int line_;
};

/// A measurement outcome that the algorithm must post-select on has zero
/// probability, so the conditional state does not exist.
class PostSelectionError : public Error {
public:
  using Error::Error;
};

/// Two independently computed quantities that must agree (up to a documented
/// tolerance) do not.  Indicates a bug or numerically hostile input, never a
/// user error.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

} // namespace qhhl
