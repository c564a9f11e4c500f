#pragma once

#include <string>

#include "spreadcover/monomial.hpp"

namespace spreadcover {

// Plain-text edge ideal of S_n(d): a legend mapping z_i to its monomial
// followed by one quadratic generator z_a*z_b per edge, ready for pasting
// into a computer algebra system.
std::string export_edge_ideal(int n, int d, int vertex_cap = kDefaultVertexCap);

} // namespace spreadcover
