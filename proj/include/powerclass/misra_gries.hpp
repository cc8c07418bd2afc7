#pragma once

#include "powerclass/edge_coloring.hpp"

namespace powerclass {

/// Fan-rotation edge coloring with at most Delta+1 colors (palette Delta+1).
EdgeColoring misra_gries(const Graph& g);

}  // namespace powerclass
