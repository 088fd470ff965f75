#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "planedual/dual.hpp"

namespace planedual {

/// An unordered bipartition {S, T} of the vertex set of a host graph,
/// both sides nonempty. Stored normalized with vertex 0 in S, so value
/// equality is equality of unordered pairs.
class Bipartition {
public:
    /// Build from the S side; the complement is T. Throws
    /// std::invalid_argument if a side is empty or an id is out of range.
    static Bipartition from_s_vertices(std::int32_t n_vertices,
                                       const std::vector<VertexId>& s);
    static Bipartition from_membership(std::vector<bool> in_s);

    bool in_s(VertexId v) const { return in_s_[static_cast<std::size_t>(v)]; }
    std::int32_t vertex_count() const { return static_cast<std::int32_t>(in_s_.size()); }
    const std::vector<bool>& membership() const { return in_s_; }

    std::vector<VertexId> s_vertices() const;
    std::vector<VertexId> t_vertices() const;

    bool operator==(const Bipartition&) const = default;

private:
    explicit Bipartition(std::vector<bool> in_s) : in_s_(std::move(in_s)) {}

    std::vector<bool> in_s_; ///< normalized: in_s_[0] is true
};

enum class SubgraphKind { Tree, Forest, Cyclic };
enum class IntersectionKind { Empty, Vertex, Path, WholeCycle, Scattered };

const char* to_string(SubgraphKind k);
const char* to_string(IntersectionKind k);

/// Classify the subgraph induced by X. Forest means acyclic but
/// disconnected; a pair of parallel edges inside X already counts as a
/// cycle. Throws std::invalid_argument for empty X.
SubgraphKind induced_kind(const PlaneMultigraph& g, const std::vector<VertexId>& xs);
SubgraphKind induced_kind(const PlaneMultigraph& g, const std::vector<bool>& in_x);

/// E[S,T]: the edges with one endpoint on each side. Together with the
/// edges inside S and inside T this partitions the edge set.
EdgeSet cross_edges(const PlaneMultigraph& g, const Bipartition& p);

/// Classify the S-marked positions on the facial cycle's vertex sequence:
/// none, all, a single vertex, one contiguous cyclic arc, or scattered.
IntersectionKind facial_intersection(const PlaneMultigraph& g,
                                     const std::vector<VertexId>& s,
                                     const FacialCycle& c);
IntersectionKind facial_intersection(const PlaneMultigraph& g,
                                     const std::vector<bool>& in_s,
                                     const FacialCycle& c);

/// A Hamilton cycle of the dual, written as the cyclic alternating
/// sequence of dual vertices (primal face ids) and the primal edges
/// joining consecutive ones.
struct CertStep {
    FaceId face = 0;
    EdgeId edge = 0;

    auto operator<=>(const CertStep&) const = default;
};

class InvalidCertificate : public std::runtime_error {
public:
    explicit InvalidCertificate(const std::string& reason)
        : std::runtime_error(reason) {}
};

class HamiltonCycleCertificate {
public:
    /// Normalizes: rotated to start at the smallest face id and oriented
    /// toward the smaller of that face's two cycle neighbors (ties, which
    /// occur only on 2-cycles, break toward the smaller edge). Throws
    /// InvalidCertificate if faces or edges repeat or fewer than two
    /// steps are given.
    static HamiltonCycleCertificate from_steps(std::vector<CertStep> steps);

    /// Parse the "face:edge,face:edge,..." form emitted by to_string().
    static HamiltonCycleCertificate parse(std::string_view text);

    const std::vector<CertStep>& steps() const { return steps_; }
    std::string to_string() const;

    EdgeSet edge_set() const;

    bool operator==(const HamiltonCycleCertificate&) const = default;

private:
    explicit HamiltonCycleCertificate(std::vector<CertStep> steps)
        : steps_(std::move(steps)) {}

    std::vector<CertStep> steps_;
};

class ConditionViolated : public std::runtime_error {
public:
    explicit ConditionViolated(const std::string& clause)
        : std::runtime_error(clause), clause_(clause) {}

    const std::string& clause() const { return clause_; }

private:
    std::string clause_;
};

/// The four equivalent conditions on a bipartition {S, T}:
///   1. both sides acyclic, and S meets every facial cycle in a path or
///      a single vertex;
///   2. the dual image of E[S,T] is the edge set of a Hamilton cycle of
///      the dual (checked against a freshly constructed dual);
///   3. both sides are trees;
///   4. S is a tree, and S meets every facial cycle in a path or a
///      single vertex (asymmetric in S by design).
/// Throws std::invalid_argument unless which is 1..4 and p matches g.
bool check_condition(const PlaneMultigraph& g, const Bipartition& p, int which);

/// Constructive direction 1 -> 2: walk the two cross edges on each face.
/// Throws ConditionViolated naming the failed clause when condition 1
/// does not hold.
HamiltonCycleCertificate partition_to_dual_cycle(const PlaneMultigraph& g,
                                                 const Bipartition& p);

/// Constructive direction 2 -> 3: deleting the certificate's edges from
/// g leaves exactly two components, both inducing trees. Throws
/// InvalidCertificate when the certificate is not a Hamilton cycle of
/// the dual of g (wrong face count, unknown edge, or consecutive faces
/// that do not share the listed edge).
Bipartition dual_cycle_to_partition(const PlaneMultigraph& g,
                                    const HamiltonCycleCertificate& cert);

} // namespace planedual
