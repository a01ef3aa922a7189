#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sperner {

/// Base of every error the library reports.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown identifiers, cycles, bad files.
class InputError : public Error {
public:
  using Error::Error;
};

/// Syntax error in a textual literal, with the byte offset where parsing stopped.
class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An exhaustive search would exceed its configured bound.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// Operation called outside its domain (e.g. splitting a non-maximal antichain).
class PreconditionError : public Error {
public:
  using Error::Error;
};

} // namespace sperner
