#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "montes/zpoly.hpp"

namespace montes {

// expr := ['+'|'-'] term (('+'|'-') term)*; term := factor ('*' factor)*; factor := base ('^' nat)?;
// base := 'x' | integer | '(' expr ')'. Blanks are skipped. Errors are ParseError with the byte offset.
IntPolynomial parse_poly(std::string_view text);

// one decimal per line, leading coefficient first; blank lines and '#' comments ignored
IntPolynomial parse_coeffs(std::string_view text);
std::string format_coeffs(const IntPolynomial& p);

// limits that keep a typo like x^99999999 from eating the machine
inline constexpr unsigned long kMaxExponent = 1000000;
inline constexpr long kMaxParsedDegree = 1000000;

}  // namespace montes
