#pragma once

#include "msurf/exactalg/multipoly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace msurf {

/// Syntax or semantic error while reading a polynomial; position is a
/// 0-based byte offset into the parsed text.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("position " + std::to_string(position) + ": " + message),
          position_(position), message_(message) {}
    std::size_t position() const { return position_; }
    const std::string& message() const { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary ('*' unary)*
///   unary  := ('-' | '+') unary | power
///   power  := atom ('^' digits)?
///   atom   := digits ('/' digits)? | 'w' | variable | '(' expr ')'
/// A rational literal a/b is one token; there is no division operator and
/// juxtaposition is not multiplication.
MultiPoly poly_parse(std::string_view text, const VarsPtr& vars, const Field& field);
MultiPoly poly_parse(std::string_view text, const MultiPoly& ring_of, const Field& field);

}  // namespace msurf
