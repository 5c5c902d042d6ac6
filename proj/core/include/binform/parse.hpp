#pragma once

#include <string>
#include <string_view>

#include "binform/forms.hpp"

namespace binform {

/// Parses a binary form from text. Two syntaxes are accepted:
///
///   [a0, a1, ..., an]            coefficient list, entries integer, p/q or decimal
///   X*Y*(X - Y), X^2 - Y^2       homogeneous polynomial expression
///
/// Expressions allow + - * / (division by constants only), ^ with a
/// non-negative integer exponent, implicit multiplication ("2XY(X-Y)"),
/// parentheses, and the shorthands P(k) and FSTAR(n) for the generator
/// families. Decimals are read exactly, so every parsed form is exact.
/// Throws ParseError with a character position.
BinaryForm parse_form(std::string_view text);

/// Coefficient-list rendering, e.g. "[0, 1, -1, 0]" or "[0, 0.75, 0, -0.25]".
/// Exact forms print as integers or p/q and round-trip exactly; real floating
/// forms print the shortest decimal that reads back to the same double.
/// Non-real coefficients print as "re+imi", which parse_form does not accept.
std::string format_form(const BinaryForm& form);

/// Single coefficient rendering used by format_form.
std::string format_rational(const Rational& q);
std::string format_double(double v);

}  // namespace binform
