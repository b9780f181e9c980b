#pragma once

#include <stdexcept>
#include <string>

namespace magnus {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed input text (word grammar, series text, presentation files).
/// `position` is a 0-based byte offset into the offending input.
class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// A precondition of an operation was violated (identity word where a
/// nontrivial one is required, metric of a series outside the augmentation
/// ideal, rejected G_w data, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Values from incompatible contexts were mixed: words over different
/// alphabets, series of different rank or truncation.
class MismatchError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A configured resource cap (class bound, generator count, truncation
/// schedule, timeout) was exceeded. Never a silent wrong answer.
class ResourceError : public Error {
public:
  using Error::Error;
};

} // namespace magnus
