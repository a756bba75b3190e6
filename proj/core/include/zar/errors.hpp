#pragma once

#include <stdexcept>
#include <string>

namespace zar {

/// Thrown when an input violates a structural precondition (a Cayley table
/// that is not a group law, an element of the wrong shape, a subgroup spec
/// that does not resolve, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error in the equation DSL or an expression file, with the byte
/// offset of the offending token.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace zar
