#pragma once

#include <iosfwd>
#include <string_view>

#include "canclab/diagram.hpp"

namespace canclab {

/// Diagram file:
///   d <id> <twin> <origin>
///   rot <vertex> <dart list>
///   outer <dart>
///   lab v<vertex> <target-vertex>   (optional, needs a target complex)
///   lab d<dart> <+edge|-edge>
///   lab f<dart> <target-face>
/// Diagram ids are nonnegative integers, target cells are named.
DiscDiagram read_diagram(std::istream& in, const TwoComplex* target = nullptr);
DiscDiagram parse_diagram(std::string_view text, const TwoComplex* target = nullptr);
void write_diagram(std::ostream& out, const DiscDiagram& d, const TwoComplex* target = nullptr);

}  // namespace canclab
