#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "matgerm/polynomial.hpp"

namespace matgerm {

struct ParseError : std::runtime_error {
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos),
        message(msg) {}
  std::size_t position;
  std::string message;
};

/// Parses the expression grammar used by germ files:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' uint]
///   atom   := '(' expr ')' | rational | variable
///   rational := uint ['/' uint]
/// Implicit multiplication is rejected; '^' takes a non-negative integer.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& varnames);

}  // namespace matgerm
