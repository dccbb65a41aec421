#pragma once

#include <string_view>

#include "eszlab/poly.hpp"

namespace eszlab::exactq {

/**
 * Parses a polynomial expression.
 *
 * Grammar (whitespace ignored, implicit multiplication not allowed):
 *   expr             := term (('+'|'-') term)*
 *   term             := factor ('*' factor)*
 *   factor           := base ('^' nonneg-integer)?
 *   base             := rational-literal | 'x' | 'y' | 'z' | '(' expr ')'
 *   rational-literal := integer ('/' positive-integer)?
 *
 * Throws ParseError with the byte offset of the offending character;
 * unrecognized identifiers throw with errc::unknown_variable.
 */
Poly parse_poly(std::string_view text);

// A single rational literal (entire string, surrounding whitespace allowed).
Rational parse_rational(std::string_view text);

// Curve specification "y^2 = <univariate expr in x>".
UniPoly parse_curve_rhs(std::string_view text);

}  // namespace eszlab::exactq
