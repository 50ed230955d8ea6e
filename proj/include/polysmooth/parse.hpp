#ifndef POLYSMOOTH_PARSE_HPP
#define POLYSMOOTH_PARSE_HPP

#include <string>

#include "polysmooth/intpoly.hpp"

namespace polysmooth {

/// Parses polynomial expressions over one variable: integer literals, + - *,
/// right-associative ^ with nonnegative integer exponents, parentheses, unary
/// minus, and at most one top-level division by a nonzero integer, e.g.
/// "t^4+4*t^2-t+1" or "-(x^2+x+3)/2".  Throws SyntaxError (with byte offset)
/// or NonIntegerExponent.
RatPoly parse_poly(const std::string& text);

/// Name of the variable seen by the last successful parse_poly call on this
/// text, or "t" when none appears.
std::string poly_variable(const std::string& text);

}  // namespace polysmooth

#endif
