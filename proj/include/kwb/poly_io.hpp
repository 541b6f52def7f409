#pragma once

#include <string>

#include "kwb/poly.hpp"

namespace kwb {

// Shared polynomial text grammar: rational coefficients (`p/q`), variables
// `x1..xn` (or `z1..zn` when laurent), operators `+ - * ^`, parentheses,
// implicit multiplication by juxtaposition; whitespace-insensitive.
// Round-trip guarantee: parse_poly(print_poly(p)) == p.
Poly parse_poly(const std::string& text, int nvars, bool laurent = false);

std::string print_poly(const Poly& p);

}  // namespace kwb
