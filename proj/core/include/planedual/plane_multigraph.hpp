#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "planedual/edge_set.hpp"
#include "planedual/rotation_system.hpp"

namespace planedual {

/// One orbit of phi = sigma∘alpha, rotated to start at its smallest dart.
/// In a loopless 2-connected plane multigraph every facial walk is a
/// cycle, so the induced vertex sequence has no repeats.
struct FacialCycle {
    FaceId id = 0;
    std::vector<Dart> darts;
    std::vector<VertexId> vertices;

    std::int32_t length() const { return static_cast<std::int32_t>(darts.size()); }

    bool operator==(const FacialCycle&) const = default;
};

/// Failure kinds in the fixed check order; the first violated check wins,
/// so the verdict is deterministic for a given input.
enum class Verdict {
    Ok,
    MalformedPermutation,
    LoopFound,
    Disconnected,
    CutVertex,
    Bridge,
    GenusNonZero,
};

const char* to_string(Verdict v);

struct ValidationReport {
    Verdict verdict = Verdict::Ok;
    std::optional<Dart> dart;
    std::optional<VertexId> vertex;
    std::optional<EdgeId> edge;
    std::optional<std::int32_t> euler_characteristic;

    bool ok() const { return verdict == Verdict::Ok; }
};

/// A validated rotation system: loopless, connected, no cut vertex, no
/// bridge, at least two vertices, and V - E + F = 2. Faces are cached at
/// construction and ordered by their smallest dart. Immutable.
class PlaneMultigraph {
public:
    const RotationSystem& rotation() const { return rs_; }
    std::int32_t vertex_count() const { return rs_.n_vertices; }
    std::int32_t edge_count() const { return rs_.n_edges; }
    std::int32_t face_count() const { return static_cast<std::int32_t>(faces_.size()); }

    const std::vector<FacialCycle>& faces() const { return faces_; }
    const FacialCycle& face(FaceId f) const { return faces_[static_cast<std::size_t>(f)]; }
    FaceId face_of(Dart d) const { return face_of_[static_cast<std::size_t>(d)]; }

    VertexId vertex_of(Dart d) const { return rs_.vertex_of[static_cast<std::size_t>(d)]; }
    std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
        return {vertex_of(first_dart(e)), vertex_of(second_dart(e))};
    }
    /// The two faces bordering edge e (distinct, since there are no bridges).
    std::pair<FaceId, FaceId> side_faces(EdgeId e) const {
        return {face_of(first_dart(e)), face_of(second_dart(e))};
    }

    /// Next dart on the facial walk: phi(d) = sigma(alpha(d)).
    Dart phi(Dart d) const { return rs_.sigma[static_cast<std::size_t>(twin(d))]; }

    /// Darts at v in rotation order, starting at the smallest.
    const std::vector<Dart>& darts_at(VertexId v) const {
        return darts_at_[static_cast<std::size_t>(v)];
    }
    std::int32_t degree(VertexId v) const {
        return static_cast<std::int32_t>(darts_at(v).size());
    }

private:
    PlaneMultigraph(RotationSystem rs, std::vector<FacialCycle> faces,
                    std::vector<FaceId> face_of, std::vector<std::vector<Dart>> darts_at)
        : rs_(std::move(rs)),
          faces_(std::move(faces)),
          face_of_(std::move(face_of)),
          darts_at_(std::move(darts_at)) {}

    friend std::optional<PlaneMultigraph> validate(const RotationSystem&, ValidationReport*);

    RotationSystem rs_;
    std::vector<FacialCycle> faces_;
    std::vector<FaceId> face_of_;
    std::vector<std::vector<Dart>> darts_at_;
};

/// Certify membership in the family of loopless 2-connected plane
/// multigraphs. Checks run in the fixed order permutation, loop,
/// connectivity, cut vertex, bridge, genus; on failure the returned
/// optional is empty and *report (when given) carries the verdict and a
/// witness. Witnesses are the smallest offending dart/vertex/edge, or
/// the computed Euler characteristic for GenusNonZero.
std::optional<PlaneMultigraph> validate(const RotationSystem& rs,
                                        ValidationReport* report = nullptr);

/// Connected components of the graph with the given edges deleted
/// (vertices kept), grouped and ordered by smallest member.
std::vector<std::vector<VertexId>> components(const RotationSystem& rs,
                                              const EdgeSet& removed_edges);

} // namespace planedual
