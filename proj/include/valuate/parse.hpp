#pragma once

#include <string_view>

#include "valuate/poly.hpp"

namespace valuate {

/* Grammar (whitespace insensitive):
 *   poly  := term (("+"|"-") term)*
 *   term  := coeff | coeff? var ("^" nat)?
 *   coeff := nat ("/" nat)?
 *   var   := "x" | "X"
 * Exponents above 64 are rejected. Throws parse_error with a position. */
RatPoly parse_poly(std::string_view text);

/* CLI input form: a polynomial per the grammar, or "rational:n/d" which
 * maps the rational q to the polynomial x - q. */
RatPoly parse_cli_input(std::string_view text);

// RatPoly with integer coefficients -> IntPoly; throws invalid_input else.
IntPoly int_poly_from_rat(const RatPoly& f);

}  // namespace valuate
