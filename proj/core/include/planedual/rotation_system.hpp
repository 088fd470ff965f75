#pragma once

#include <cstdint>
#include <vector>

#include "planedual/dart.hpp"

namespace planedual {

/// A combinatorial map: for every dart, sigma gives the next dart
/// counterclockwise around the dart's vertex. Together with the implicit
/// pairing alpha(d) = d XOR 1 this fixes an embedding of the underlying
/// multigraph on an orientable surface.
///
/// A RotationSystem is an unchecked candidate; validate() in
/// plane_multigraph.hpp certifies the invariants (sigma a permutation
/// whose orbits are exactly the per-vertex dart sets, every vertex
/// owning at least one dart).
struct RotationSystem {
    std::int32_t n_vertices = 0;
    std::int32_t n_edges = 0;
    std::vector<Dart> sigma;        ///< size 2*n_edges
    std::vector<VertexId> vertex_of; ///< size 2*n_edges

    std::int32_t dart_count() const { return 2 * n_edges; }

    bool operator==(const RotationSystem&) const = default;
};

/// Smallest dart owned by each vertex, or -1 for a vertex owning none.
std::vector<Dart> min_dart_per_vertex(const RotationSystem& rs);

/// Degree of each vertex (darts owned, which counts parallel edges).
std::vector<std::int32_t> vertex_degrees(const RotationSystem& rs);

/// Reassign vertex ids in ascending order of each vertex's smallest dart.
/// The permutation sigma is untouched; only labels move. A map whose
/// labels are already canonical is returned unchanged.
RotationSystem canonicalize_vertex_ids(const RotationSystem& rs);

} // namespace planedual
