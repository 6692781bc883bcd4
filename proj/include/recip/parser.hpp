#ifndef RECIP_PARSER_HPP
#define RECIP_PARSER_HPP

#include <string>

#include "recip/bipoly.hpp"

namespace recip {

/// Parse a polynomial expression in x and y.
///
/// Grammar: `+ - * ^`, integer and p/q rational literals, parentheses,
/// unary minus; `^` takes a nonnegative integer literal exponent; no
/// implicit multiplication. Throws SyntaxError with a 1-based position.
BiPoly parse_poly(const std::string& src);

/// Canonical rendering: graded-lex term order (x before y), explicit `*`.
/// parse_poly(format_poly(p)) == p.
std::string format_poly(const BiPoly& p);

} // namespace recip

#endif
