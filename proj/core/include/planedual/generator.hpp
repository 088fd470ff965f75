#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <variant>

#include "planedual/plane_multigraph.hpp"

namespace planedual {

/// splitmix64. Fixed and portable so generated corpora are bit-identical
/// across platforms; split() derives an independent stream.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

/// Class-preserving moves: each one adds a cycle through the new element
/// or lengthens an existing one, so looplessness and 2-connectivity
/// survive and the Euler relation is maintained.
struct AddParallel {
    EdgeId edge = 0;
    /// Which of the edge's two bordering faces receives the new 2-gon.
    FaceId side_face = 0;
};
struct AddChord {
    FaceId face = 0;
    VertexId u = 0;
    VertexId v = 0; ///< u != v, both on the face's cycle
};
struct Subdivide {
    EdgeId edge = 0;
};
using Mutation = std::variant<AddParallel, AddChord, Subdivide>;

class MalformedMutation : public std::runtime_error {
public:
    explicit MalformedMutation(const std::string& reason)
        : std::runtime_error(reason) {}
};

enum class StartGraph { D2, C3 };

struct GenConfig {
    std::uint64_t seed = 0;
    std::int32_t steps = 0;
    /// Relative weights of AddParallel, AddChord, Subdivide.
    std::array<std::uint32_t, 3> weights{1, 1, 1};
    StartGraph start = StartGraph::D2;
};

/// The dipole D2 (minimal family member) or the triangle C3, canonically
/// labeled.
PlaneMultigraph start_graph(StartGraph s);

/// Apply one mutation. AddParallel and AddChord: E+1, F+1, V unchanged;
/// Subdivide: V+1, E+1, F unchanged. The result always revalidates.
/// Throws MalformedMutation when the move does not fit g (edge or face
/// out of range, chord endpoints equal or off the face, side face not
/// bordering the edge).
PlaneMultigraph apply_mutation(const PlaneMultigraph& g, const Mutation& m);

/// Seeded random walk over mutations: per step, one splitmix64 draw
/// picks the kind by cumulative weight and a second indexes into the
/// kind's candidates enumerated in canonical ascending order. The result
/// is relabeled canonically, so generation is a pure function of the
/// config. Throws std::invalid_argument when steps > 0 and all weights
/// are zero.
PlaneMultigraph generate(const GenConfig& cfg);

} // namespace planedual
