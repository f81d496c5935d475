#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grouprho {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word, presentation or numeric text. position() is a 0-based
// byte offset into the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        _position(position) {}

  std::size_t position() const noexcept { return _position; }

 private:
  std::size_t _position;
};

// An operation was called on input outside its contract, e.g. Dehn's
// algorithm on a presentation that is not C'(1/6).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured resource cap (ball vertices, word length, ...) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace grouprho
