#pragma once

#include <string_view>

#include "dp2/picard.hpp"

namespace dp2 {

// Parses a divisor class. Accepted forms (whitespace is ignored):
//   raw vector   "d,m1,m2,m3,m4,m5,m6,m7"
//   symbolic     sum of [+|-][n][*]TOKEN with TOKEN one of
//                H K L F E1..E7 Lij Cij Di, or the literal 0.
// Lij and Cij accept either index order. Throws ParseError.
DivClass parse_divisor(std::string_view text);

}  // namespace dp2
