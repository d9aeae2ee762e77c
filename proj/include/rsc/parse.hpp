#pragma once

#include <string_view>

#include "rsc/core/cubic.hpp"
#include "rsc/numerics/field_element.hpp"

namespace rsc {

/// Coefficient expressions:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := integer | 'sqrt(' ['-'] integer ')' | '(' expr ')' | '-' factor
/// Whitespace is ignored. sqrt(n) is normalized to g*sqrt(kernel), so
/// "sqrt(8)" is 2*sqrt(2); a negative n gives an imaginary square root.
/// Throws ParseError (with the offending offset) or the arithmetic errors
/// DivisionByZero and FieldTooLarge.
FieldElement parse_coeff(std::string_view text);

/// "1,P,Q,R" with each entry a coefficient expression; the leading 1 is required.
ExactCubic parse_cubic(std::string_view text);

}  // namespace rsc
