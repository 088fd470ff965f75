#include "planedual/dual.hpp"

#include <stdexcept>

#include "planedual/union_find.hpp"

namespace planedual {

DualPair dual(const PlaneMultigraph& g) {
    const RotationSystem& rs = g.rotation();
    RotationSystem dual_rs;
    dual_rs.n_vertices = g.face_count();
    dual_rs.n_edges = rs.n_edges;
    dual_rs.sigma.resize(static_cast<std::size_t>(rs.dart_count()));
    dual_rs.vertex_of.resize(static_cast<std::size_t>(rs.dart_count()));
    for (Dart d = 0; d < rs.dart_count(); ++d) {
        dual_rs.sigma[static_cast<std::size_t>(d)] = g.phi(d);
        dual_rs.vertex_of[static_cast<std::size_t>(d)] = g.face_of(d);
    }

    ValidationReport report;
    auto dual_graph = validate(dual_rs, &report);
    if (!dual_graph)
        throw std::logic_error(std::string("dual failed to validate: ") +
                               to_string(report.verdict));
    return DualPair{g, std::move(*dual_graph)};
}

bool is_bond(const PlaneMultigraph& g, const EdgeSet& cut) {
    if (cut.empty()) return false;
    for (EdgeId e : cut)
        if (e < 0 || e >= g.edge_count()) return false;

    auto comps = components(g.rotation(), cut);
    if (comps.size() != 2) return false;

    // Exactly two sides; the cut is minimal iff it wastes no edge inside
    // a side, i.e. every cut edge actually crosses.
    std::vector<char> side(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : comps[1]) side[static_cast<std::size_t>(v)] = 1;
    for (EdgeId e : cut) {
        auto [a, b] = g.endpoints(e);
        if (side[static_cast<std::size_t>(a)] == side[static_cast<std::size_t>(b)])
            return false;
    }
    return true;
}

bool is_cycle_edge_set(const PlaneMultigraph& g, const EdgeSet& edges) {
    if (edges.empty()) return false;
    std::vector<std::int32_t> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    UnionFindUndo dsu(g.vertex_count());
    std::int32_t touched = 0;
    std::int32_t merges = 0;
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        auto [a, b] = g.endpoints(e);
        if (degree[static_cast<std::size_t>(a)]++ == 0) ++touched;
        if (degree[static_cast<std::size_t>(b)]++ == 0) ++touched;
        if (dsu.unite(a, b)) ++merges;
    }
    for (std::size_t v = 0; v < degree.size(); ++v)
        if (degree[v] != 0 && degree[v] != 2) return false;
    // All degrees 2: connected iff the touched subgraph is one component.
    return merges == touched - 1;
}

} // namespace planedual
