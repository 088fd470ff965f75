#include "planedual/export.hpp"

#include <sstream>

namespace planedual {

std::string to_dot(const RotationSystem& rs) {
    std::ostringstream out;
    out << "graph pmap {\n";
    for (VertexId v = 0; v < rs.n_vertices; ++v) out << "  " << v << ";\n";
    for (EdgeId e = 0; e < rs.n_edges; ++e) {
        VertexId a = rs.vertex_of[static_cast<std::size_t>(first_dart(e))];
        VertexId b = rs.vertex_of[static_cast<std::size_t>(second_dart(e))];
        out << "  " << a << " -- " << b << " [label=" << e << "];\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_graphml(const RotationSystem& rs) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out << "  <graph id=\"pmap\" edgedefault=\"undirected\">\n";
    for (VertexId v = 0; v < rs.n_vertices; ++v)
        out << "    <node id=\"n" << v << "\"/>\n";
    for (EdgeId e = 0; e < rs.n_edges; ++e) {
        VertexId a = rs.vertex_of[static_cast<std::size_t>(first_dart(e))];
        VertexId b = rs.vertex_of[static_cast<std::size_t>(second_dart(e))];
        out << "    <edge id=\"e" << e << "\" source=\"n" << a << "\" target=\"n" << b
            << "\"/>\n";
    }
    out << "  </graph>\n";
    out << "</graphml>\n";
    return out.str();
}

} // namespace planedual
