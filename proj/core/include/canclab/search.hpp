#pragma once

#include <optional>
#include <span>

#include "canclab/diagram.hpp"

namespace canclab {

struct MinimalDiagramResult {
    bool found = false;
    int area = -1;
    std::optional<DiscDiagram> diagram;  // validated, labeled, reduced
};

/// Exhaustive breadth-first search for a minimal-area disc diagram whose
/// boundary spells the closed path w (up to rotation). States are boundary
/// words after face removals, deduplicated by cyclic canonical form; the
/// witness diagram is rebuilt by replaying the removals backwards.
/// Certifies that no diagram of smaller area exists within the bound.
MinimalDiagramResult search_minimal_diagram(const TwoComplex& c, std::span<const SignedEdge> w,
                                            int area_bound);

}  // namespace canclab
