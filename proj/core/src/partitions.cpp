#include "planedual/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "planedual/union_find.hpp"

namespace planedual {

const char* to_string(SubgraphKind k) {
    switch (k) {
    case SubgraphKind::Tree: return "Tree";
    case SubgraphKind::Forest: return "Forest";
    case SubgraphKind::Cyclic: return "Cyclic";
    }
    return "?";
}

const char* to_string(IntersectionKind k) {
    switch (k) {
    case IntersectionKind::Empty: return "Empty";
    case IntersectionKind::Vertex: return "Vertex";
    case IntersectionKind::Path: return "Path";
    case IntersectionKind::WholeCycle: return "WholeCycle";
    case IntersectionKind::Scattered: return "Scattered";
    }
    return "?";
}

Bipartition Bipartition::from_membership(std::vector<bool> in_s) {
    if (in_s.empty()) throw std::invalid_argument("bipartition of an empty vertex set");
    std::size_t s_count = static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), true));
    if (s_count == 0 || s_count == in_s.size())
        throw std::invalid_argument("both sides of a bipartition must be nonempty");
    if (!in_s[0]) in_s.flip(); // unordered: keep vertex 0 in S
    return Bipartition(std::move(in_s));
}

Bipartition Bipartition::from_s_vertices(std::int32_t n_vertices,
                                         const std::vector<VertexId>& s) {
    std::vector<bool> in_s(static_cast<std::size_t>(n_vertices), false);
    for (VertexId v : s) {
        if (v < 0 || v >= n_vertices)
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
        in_s[static_cast<std::size_t>(v)] = true;
    }
    return from_membership(std::move(in_s));
}

std::vector<VertexId> Bipartition::s_vertices() const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < in_s_.size(); ++v)
        if (in_s_[v]) out.push_back(static_cast<VertexId>(v));
    return out;
}

std::vector<VertexId> Bipartition::t_vertices() const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < in_s_.size(); ++v)
        if (!in_s_[v]) out.push_back(static_cast<VertexId>(v));
    return out;
}

SubgraphKind induced_kind(const PlaneMultigraph& g, const std::vector<bool>& in_x) {
    std::int32_t members = 0;
    for (bool b : in_x)
        if (b) ++members;
    if (members == 0) throw std::invalid_argument("induced_kind: empty vertex set");

    UnionFindUndo dsu(g.vertex_count());
    std::int32_t merges = 0;
    bool cyclic = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (!in_x[static_cast<std::size_t>(a)] || !in_x[static_cast<std::size_t>(b)]) continue;
        if (dsu.unite(a, b))
            ++merges;
        else
            cyclic = true; // second path between a and b, parallel edges included
    }
    if (cyclic) return SubgraphKind::Cyclic;
    return merges == members - 1 ? SubgraphKind::Tree : SubgraphKind::Forest;
}

SubgraphKind induced_kind(const PlaneMultigraph& g, const std::vector<VertexId>& xs) {
    std::vector<bool> in_x(static_cast<std::size_t>(g.vertex_count()), false);
    for (VertexId v : xs) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
        in_x[static_cast<std::size_t>(v)] = true;
    }
    return induced_kind(g, in_x);
}

EdgeSet cross_edges(const PlaneMultigraph& g, const Bipartition& p) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("bipartition does not match the graph");
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (p.in_s(a) != p.in_s(b)) out.push_back(e);
    }
    return EdgeSet(std::move(out));
}

IntersectionKind facial_intersection(const PlaneMultigraph& g, const std::vector<bool>& in_s,
                                     const FacialCycle& c) {
    (void)g;
    const std::size_t len = c.vertices.size();
    std::size_t marked = 0;
    for (VertexId v : c.vertices)
        if (in_s[static_cast<std::size_t>(v)]) ++marked;
    if (marked == 0) return IntersectionKind::Empty;
    if (marked == len) return IntersectionKind::WholeCycle;
    if (marked == 1) return IntersectionKind::Vertex;

    // Count maximal marked blocks around the cycle via marked->unmarked
    // transitions; one block of >= 2 vertices is a path.
    std::size_t blocks = 0;
    for (std::size_t i = 0; i < len; ++i) {
        bool here = in_s[static_cast<std::size_t>(c.vertices[i])];
        bool next = in_s[static_cast<std::size_t>(c.vertices[(i + 1) % len])];
        if (here && !next) ++blocks;
    }
    return blocks == 1 ? IntersectionKind::Path : IntersectionKind::Scattered;
}

IntersectionKind facial_intersection(const PlaneMultigraph& g, const std::vector<VertexId>& s,
                                     const FacialCycle& c) {
    if (s.empty()) throw std::invalid_argument("facial_intersection: empty vertex set");
    std::vector<bool> in_s(static_cast<std::size_t>(g.vertex_count()), false);
    for (VertexId v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
        in_s[static_cast<std::size_t>(v)] = true;
    }
    return facial_intersection(g, in_s, c);
}

namespace {

std::vector<bool> complement(const std::vector<bool>& in_s) {
    std::vector<bool> out = in_s;
    out.flip();
    return out;
}

bool acyclic(SubgraphKind k) { return k != SubgraphKind::Cyclic; }

bool facial_condition_on_s(const PlaneMultigraph& g, const std::vector<bool>& in_s) {
    for (const FacialCycle& c : g.faces()) {
        IntersectionKind k = facial_intersection(g, in_s, c);
        if (k != IntersectionKind::Path && k != IntersectionKind::Vertex) return false;
    }
    return true;
}

bool spans_all_vertices(const PlaneMultigraph& g, const EdgeSet& edges) {
    std::vector<bool> touched(static_cast<std::size_t>(g.vertex_count()), false);
    for (EdgeId e : edges) {
        auto [a, b] = g.endpoints(e);
        touched[static_cast<std::size_t>(a)] = true;
        touched[static_cast<std::size_t>(b)] = true;
    }
    return std::find(touched.begin(), touched.end(), false) == touched.end();
}

// First violated clause of condition 1, for error reporting.
std::optional<std::string> condition1_violation(const PlaneMultigraph& g,
                                                const Bipartition& p) {
    if (!acyclic(induced_kind(g, p.membership())))
        return "S induces a cycle";
    if (!acyclic(induced_kind(g, complement(p.membership()))))
        return "T induces a cycle";
    for (const FacialCycle& c : g.faces()) {
        IntersectionKind k = facial_intersection(g, p.membership(), c);
        if (k != IntersectionKind::Path && k != IntersectionKind::Vertex) {
            std::ostringstream msg;
            msg << "facial cycle " << c.id << " meets S in " << to_string(k);
            return msg.str();
        }
    }
    return std::nullopt;
}

} // namespace

bool check_condition(const PlaneMultigraph& g, const Bipartition& p, int which) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("bipartition does not match the graph");
    const std::vector<bool>& in_s = p.membership();
    switch (which) {
    case 1:
        return acyclic(induced_kind(g, in_s)) &&
               acyclic(induced_kind(g, complement(in_s))) && facial_condition_on_s(g, in_s);
    case 2: {
        DualPair pair = dual(g);
        EdgeSet cross = cross_edges(g, p);
        return is_cycle_edge_set(pair.dual, cross) && spans_all_vertices(pair.dual, cross);
    }
    case 3:
        return induced_kind(g, in_s) == SubgraphKind::Tree &&
               induced_kind(g, complement(in_s)) == SubgraphKind::Tree;
    case 4:
        return induced_kind(g, in_s) == SubgraphKind::Tree && facial_condition_on_s(g, in_s);
    default:
        throw std::invalid_argument("condition must be 1, 2, 3 or 4");
    }
}

HamiltonCycleCertificate HamiltonCycleCertificate::from_steps(std::vector<CertStep> steps) {
    if (steps.size() < 2) throw InvalidCertificate("a cycle needs at least two steps");
    {
        std::vector<FaceId> faces;
        std::vector<EdgeId> edges;
        for (const CertStep& s : steps) {
            faces.push_back(s.face);
            edges.push_back(s.edge);
        }
        std::sort(faces.begin(), faces.end());
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(faces.begin(), faces.end()) != faces.end())
            throw InvalidCertificate("a face appears twice");
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InvalidCertificate("an edge appears twice");
    }

    // Rotate to the smallest face.
    std::size_t start = 0;
    for (std::size_t i = 1; i < steps.size(); ++i)
        if (steps[i].face < steps[start].face) start = i;
    std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(start), steps.end());

    // Orient toward the smaller neighbor of the start face; a tie means a
    // 2-cycle, where the smaller first edge wins. Reversal of
    // [(f0,e0),(f1,e1),...,(fk,ek)] is [(f0,ek),(fk,e(k-1)),...,(f1,e0)].
    const std::size_t k = steps.size();
    std::vector<CertStep> reversed(k);
    reversed[0] = {steps[0].face, steps[k - 1].edge};
    for (std::size_t i = 1; i < k; ++i)
        reversed[i] = {steps[k - i].face, steps[k - i - 1].edge};

    FaceId fwd_next = steps[1].face;
    FaceId rev_next = reversed[1].face;
    bool take_reversed =
        (rev_next < fwd_next) || (rev_next == fwd_next && reversed[0].edge < steps[0].edge);
    return HamiltonCycleCertificate(take_reversed ? std::move(reversed) : std::move(steps));
}

std::string HamiltonCycleCertificate::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i) out << ",";
        out << steps_[i].face << ":" << steps_[i].edge;
    }
    return out.str();
}

HamiltonCycleCertificate HamiltonCycleCertificate::parse(std::string_view text) {
    std::vector<CertStep> steps;
    std::size_t pos = 0;
    auto read_int = [&](char terminator, bool last) -> std::int32_t {
        std::size_t end = text.find(terminator, pos);
        std::string_view tok;
        if (end == std::string_view::npos) {
            if (!last) throw InvalidCertificate("expected '" + std::string(1, terminator) + "'");
            tok = text.substr(pos);
            pos = text.size();
        } else {
            tok = text.substr(pos, end - pos);
            pos = end + 1;
        }
        std::int32_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw InvalidCertificate("bad integer '" + std::string(tok) + "'");
        return value;
    };
    while (pos < text.size()) {
        CertStep step;
        step.face = read_int(':', false);
        step.edge = read_int(',', true);
        steps.push_back(step);
    }
    return from_steps(std::move(steps));
}

EdgeSet HamiltonCycleCertificate::edge_set() const {
    std::vector<EdgeId> ids;
    for (const CertStep& s : steps_) ids.push_back(s.edge);
    return EdgeSet(std::move(ids));
}

HamiltonCycleCertificate partition_to_dual_cycle(const PlaneMultigraph& g,
                                                 const Bipartition& p) {
    if (p.vertex_count() != g.vertex_count())
        throw std::invalid_argument("bipartition does not match the graph");
    if (auto violation = condition1_violation(g, p)) throw ConditionViolated(*violation);

    EdgeSet cross = cross_edges(g, p);

    // With condition 1 in hand, every face carries exactly two cross
    // edges; walk them into a cycle over all faces.
    std::vector<std::vector<CertStep>> incident(static_cast<std::size_t>(g.face_count()));
    for (EdgeId e : cross) {
        auto [fa, fb] = g.side_faces(e);
        incident[static_cast<std::size_t>(fa)].push_back({fb, e});
        incident[static_cast<std::size_t>(fb)].push_back({fa, e});
    }
    for (std::size_t f = 0; f < incident.size(); ++f) {
        if (incident[f].size() != 2)
            throw std::logic_error("face without exactly two cross edges under condition 1");
        std::sort(incident[f].begin(), incident[f].end(),
                  [](const CertStep& a, const CertStep& b) { return a.edge < b.edge; });
    }

    std::vector<CertStep> steps;
    FaceId at = 0;
    EdgeId arrived_by = -1;
    do {
        const auto& choices = incident[static_cast<std::size_t>(at)];
        const CertStep& go = (choices[0].edge != arrived_by) ? choices[0] : choices[1];
        steps.push_back({at, go.edge});
        arrived_by = go.edge;
        at = go.face;
    } while (at != 0);
    if (steps.size() != static_cast<std::size_t>(g.face_count()))
        throw std::logic_error("cross edges formed a short dual cycle under condition 1");

    return HamiltonCycleCertificate::from_steps(std::move(steps));
}

Bipartition dual_cycle_to_partition(const PlaneMultigraph& g,
                                    const HamiltonCycleCertificate& cert) {
    const auto& steps = cert.steps();
    if (static_cast<std::int32_t>(steps.size()) != g.face_count())
        throw InvalidCertificate("certificate does not visit every face exactly once");
    for (const CertStep& s : steps) {
        if (s.face < 0 || s.face >= g.face_count())
            throw InvalidCertificate("unknown face " + std::to_string(s.face));
        if (s.edge < 0 || s.edge >= g.edge_count())
            throw InvalidCertificate("unknown edge " + std::to_string(s.edge));
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
        FaceId here = steps[i].face;
        FaceId there = steps[(i + 1) % steps.size()].face;
        auto [fa, fb] = g.side_faces(steps[i].edge);
        if (!((fa == here && fb == there) || (fa == there && fb == here)))
            throw InvalidCertificate("edge " + std::to_string(steps[i].edge) +
                                     " does not join faces " + std::to_string(here) + " and " +
                                     std::to_string(there));
    }

    auto comps = components(g.rotation(), cert.edge_set());
    if (comps.size() != 2)
        throw std::logic_error("deleting a dual Hamilton cycle did not leave two components");

    std::vector<bool> in_s(static_cast<std::size_t>(g.vertex_count()), false);
    for (VertexId v : comps[0]) in_s[static_cast<std::size_t>(v)] = true;
    Bipartition p = Bipartition::from_membership(std::move(in_s));

    if (induced_kind(g, p.membership()) != SubgraphKind::Tree ||
        induced_kind(g, complement(p.membership())) != SubgraphKind::Tree)
        throw std::logic_error("sides of a dual Hamilton cycle partition are not both trees");
    return p;
}

} // namespace planedual
