#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cmdev {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings or free modules.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition does not hold (non-homogeneous input, zero module, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configured safety cap tripped (degree cap, exponent overflow).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Randomized search exhausted its budget. Retrying with another seed may succeed.
class SearchFailure : public Error {
 public:
  SearchFailure(const std::string& what, std::uint64_t seed)
      : Error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }

 private:
  std::uint64_t seed_;
};

/// Well-formed document with invalid content; `path` names the offending field.
class InputError : public Error {
 public:
  InputError(const std::string& path, const std::string& msg) : Error(path + ": " + msg), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Malformed textual input; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace cmdev
