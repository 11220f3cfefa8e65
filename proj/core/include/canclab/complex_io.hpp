#pragma once

#include <iosfwd>
#include <string_view>

#include "canclab/complex.hpp"

namespace canclab {

/// Line-oriented complex file:
///   v <id>
///   e <id> <tail> <head>
///   f <id> <signed edge list, e.g. +e0 -e1>
/// '#' starts a comment. Ids are alphanumeric tokens.
TwoComplex read_complex(std::istream& in);
TwoComplex parse_complex(std::string_view text);
void write_complex(std::ostream& out, const TwoComplex& c);

}  // namespace canclab
