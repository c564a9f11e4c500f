#include "spreadcover/edge_ideal.hpp"

#include <sstream>

namespace spreadcover {

std::string export_edge_ideal(int n, int d, int vertex_cap) {
    MonomialGraph g(n, d, vertex_cap);
    std::ostringstream out;
    out << "-- edge ideal of S_" << n << "(" << d << "): " << g.num_vertices()
        << " vertices, " << g.num_edges() << " edges\n";
    out << "-- legend\n";
    for (int i = 0; i < g.num_vertices(); ++i) {
        out << "-- z" << (i + 1) << " = " << g.vertex(i).to_string() << "\n";
    }
    out << "-- generators\n";
    for (int i = 0; i < g.num_vertices(); ++i) {
        for (int j : g.neighbors(i)) {
            if (j > i) out << "z" << (i + 1) << "*z" << (j + 1) << "\n";
        }
    }
    return out.str();
}

} // namespace spreadcover
