#include "planedual/rotation_system.hpp"

#include <algorithm>
#include <numeric>

namespace planedual {

std::vector<Dart> min_dart_per_vertex(const RotationSystem& rs) {
    std::vector<Dart> min_dart(static_cast<std::size_t>(rs.n_vertices), -1);
    for (Dart d = 0; d < rs.dart_count(); ++d) {
        VertexId v = rs.vertex_of[static_cast<std::size_t>(d)];
        if (v >= 0 && v < rs.n_vertices && min_dart[static_cast<std::size_t>(v)] == -1)
            min_dart[static_cast<std::size_t>(v)] = d;
    }
    return min_dart;
}

std::vector<std::int32_t> vertex_degrees(const RotationSystem& rs) {
    std::vector<std::int32_t> deg(static_cast<std::size_t>(rs.n_vertices), 0);
    for (Dart d = 0; d < rs.dart_count(); ++d) {
        VertexId v = rs.vertex_of[static_cast<std::size_t>(d)];
        if (v >= 0 && v < rs.n_vertices) ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

RotationSystem canonicalize_vertex_ids(const RotationSystem& rs) {
    std::vector<Dart> min_dart = min_dart_per_vertex(rs);
    std::vector<VertexId> by_min(static_cast<std::size_t>(rs.n_vertices));
    std::iota(by_min.begin(), by_min.end(), 0);
    std::sort(by_min.begin(), by_min.end(), [&](VertexId a, VertexId b) {
        return min_dart[static_cast<std::size_t>(a)] < min_dart[static_cast<std::size_t>(b)];
    });
    std::vector<VertexId> new_id(static_cast<std::size_t>(rs.n_vertices));
    for (std::size_t rank = 0; rank < by_min.size(); ++rank)
        new_id[static_cast<std::size_t>(by_min[rank])] = static_cast<VertexId>(rank);

    RotationSystem out = rs;
    for (std::size_t d = 0; d < out.vertex_of.size(); ++d)
        out.vertex_of[d] = new_id[static_cast<std::size_t>(rs.vertex_of[d])];
    return out;
}

} // namespace planedual
