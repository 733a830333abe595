// Polynomial text grammar shared by the CLI and tests.
//
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := postfix ('^' integer)?
//   postfix := primary ('@z')?
//   primary := integer | 'z' | 'w' | '(' expr ')' | atom
//   atom    := C(k) | CT(k) | R(i) | LNF(i) | L | LT | MT | NT
//
// C(k) and L live in z; every other atom lives in w. P@z turns a w-polynomial
// into the Laurent polynomial P(z + 1/z); a result with negative powers of z is
// multiplied by the smallest power of z that clears them.
#pragma once

#include "hyperk3/poly.hpp"

#include <stdexcept>
#include <string>

namespace hk3 {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParsedPoly {
    IntPoly poly;
    char var = 0;  // 'z', 'w', or 0 for a constant
};

ParsedPoly parse_poly(const std::string& text);

}  // namespace hk3
