#pragma once

#include <string>

#include "hsmf/polynomial.hpp"

namespace hsmf {

/// Parses polynomial text against the grammar
///
///   poly   := term (('+'|'-') term)*
///   term   := [coeff '*'] factor ('*' factor)* | coeff
///   factor := var ['^' uint]
///   coeff  := ['-'] uint ['/' uint]
///
/// with whitespace ignored and variables matched against the declared name
/// list. Throws ParseError with a byte offset on malformed input, unknown
/// variable names and zero denominators.
Polynomial parse_poly(const std::string& text, const VarSystem& vars);

}  // namespace hsmf
