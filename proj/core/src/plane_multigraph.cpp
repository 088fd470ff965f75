#include "planedual/plane_multigraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace planedual {

const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::MalformedPermutation: return "MalformedPermutation";
    case Verdict::LoopFound: return "LoopFound";
    case Verdict::Disconnected: return "Disconnected";
    case Verdict::CutVertex: return "CutVertex";
    case Verdict::Bridge: return "Bridge";
    case Verdict::GenusNonZero: return "GenusNonZero";
    }
    return "?";
}

namespace {

ValidationReport fail_dart(Verdict verdict, Dart d) {
    ValidationReport r;
    r.verdict = verdict;
    r.dart = d;
    return r;
}

ValidationReport fail_vertex(Verdict verdict, VertexId v) {
    ValidationReport r;
    r.verdict = verdict;
    r.vertex = v;
    return r;
}

ValidationReport fail_edge(Verdict verdict, EdgeId e) {
    ValidationReport r;
    r.verdict = verdict;
    r.edge = e;
    return r;
}

// Sigma must be a bijection on [0, 2m) whose orbits are exactly the
// per-vertex dart sets, one orbit per vertex, no vertex empty.
std::optional<ValidationReport> check_permutation(const RotationSystem& rs) {
    const std::int32_t n_darts = rs.dart_count();
    if (rs.n_vertices < 1 || rs.n_edges < 1 ||
        rs.sigma.size() != static_cast<std::size_t>(n_darts) ||
        rs.vertex_of.size() != static_cast<std::size_t>(n_darts))
        return fail_dart(Verdict::MalformedPermutation, 0);

    std::vector<bool> image_seen(static_cast<std::size_t>(n_darts), false);
    for (Dart d = 0; d < n_darts; ++d) {
        Dart s = rs.sigma[static_cast<std::size_t>(d)];
        if (s < 0 || s >= n_darts || image_seen[static_cast<std::size_t>(s)])
            return fail_dart(Verdict::MalformedPermutation, d);
        image_seen[static_cast<std::size_t>(s)] = true;
        VertexId v = rs.vertex_of[static_cast<std::size_t>(d)];
        if (v < 0 || v >= rs.n_vertices)
            return fail_dart(Verdict::MalformedPermutation, d);
        if (rs.vertex_of[static_cast<std::size_t>(s)] != v)
            return fail_dart(Verdict::MalformedPermutation, d);
    }

    // One sigma cycle per vertex: walking from the first dart of v must
    // visit every dart v owns.
    std::vector<std::int32_t> fiber_size(static_cast<std::size_t>(rs.n_vertices), 0);
    std::vector<Dart> first(static_cast<std::size_t>(rs.n_vertices), -1);
    for (Dart d = 0; d < n_darts; ++d) {
        VertexId v = rs.vertex_of[static_cast<std::size_t>(d)];
        ++fiber_size[static_cast<std::size_t>(v)];
        if (first[static_cast<std::size_t>(v)] == -1) first[static_cast<std::size_t>(v)] = d;
    }
    for (VertexId v = 0; v < rs.n_vertices; ++v) {
        if (fiber_size[static_cast<std::size_t>(v)] == 0)
            return fail_vertex(Verdict::MalformedPermutation, v);
        Dart start = first[static_cast<std::size_t>(v)];
        std::int32_t steps = 0;
        Dart d = start;
        do {
            d = rs.sigma[static_cast<std::size_t>(d)];
            ++steps;
        } while (d != start && steps <= n_darts);
        if (steps != fiber_size[static_cast<std::size_t>(v)])
            return fail_vertex(Verdict::MalformedPermutation, v);
    }
    return std::nullopt;
}

struct CutAndBridges {
    std::vector<VertexId> cut_vertices;
    std::vector<EdgeId> bridges;
};

// Iterative DFS over darts. Parallel edges matter: only the exact entry
// dart's twin is skipped, so a second edge back to the parent counts as
// a back edge.
CutAndBridges find_cuts_and_bridges(const RotationSystem& rs,
                                    const std::vector<std::vector<Dart>>& darts_at) {
    const std::int32_t n = rs.n_vertices;
    std::vector<std::int32_t> disc(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> low(static_cast<std::size_t>(n), 0);
    std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
    CutAndBridges out;

    struct Frame {
        VertexId v;
        Dart entry; // dart at v through which we arrived, or -1 at the root
        std::size_t next = 0;
        std::int32_t children = 0;
    };

    std::int32_t timer = 0;
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0, 0});
    disc[0] = low[0] = timer++;

    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& darts = darts_at[static_cast<std::size_t>(f.v)];
        if (f.next < darts.size()) {
            Dart d = darts[f.next++];
            if (d == f.entry) continue; // do not reuse the entry edge's dart
            VertexId u = rs.vertex_of[static_cast<std::size_t>(twin(d))];
            if (disc[static_cast<std::size_t>(u)] == -1) {
                ++f.children;
                disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
                stack.push_back({u, twin(d), 0, 0});
            } else {
                low[static_cast<std::size_t>(f.v)] = std::min(
                    low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(u)]);
            }
        } else {
            Frame done = f;
            stack.pop_back();
            if (!stack.empty()) {
                Frame& parent = stack.back();
                low[static_cast<std::size_t>(parent.v)] =
                    std::min(low[static_cast<std::size_t>(parent.v)],
                             low[static_cast<std::size_t>(done.v)]);
                if (low[static_cast<std::size_t>(done.v)] >=
                    disc[static_cast<std::size_t>(parent.v)]) {
                    if (stack.size() > 1) is_cut[static_cast<std::size_t>(parent.v)] = true;
                }
                if (low[static_cast<std::size_t>(done.v)] >
                    disc[static_cast<std::size_t>(parent.v)])
                    out.bridges.push_back(edge_of(done.entry));
            } else if (done.children >= 2) {
                is_cut[static_cast<std::size_t>(done.v)] = true;
            }
        }
    }

    for (VertexId v = 0; v < n; ++v)
        if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

std::vector<std::vector<Dart>> build_darts_at(const RotationSystem& rs) {
    std::vector<std::vector<Dart>> darts_at(static_cast<std::size_t>(rs.n_vertices));
    std::vector<Dart> min_dart = min_dart_per_vertex(rs);
    for (VertexId v = 0; v < rs.n_vertices; ++v) {
        Dart start = min_dart[static_cast<std::size_t>(v)];
        Dart d = start;
        do {
            darts_at[static_cast<std::size_t>(v)].push_back(d);
            d = rs.sigma[static_cast<std::size_t>(d)];
        } while (d != start);
    }
    return darts_at;
}

} // namespace

std::optional<PlaneMultigraph> validate(const RotationSystem& rs, ValidationReport* report) {
    auto deliver = [&](const ValidationReport& r) -> std::optional<PlaneMultigraph> {
        if (report) *report = r;
        return std::nullopt;
    };

    if (auto bad = check_permutation(rs)) return deliver(*bad);

    for (EdgeId e = 0; e < rs.n_edges; ++e)
        if (rs.vertex_of[static_cast<std::size_t>(first_dart(e))] ==
            rs.vertex_of[static_cast<std::size_t>(second_dart(e))])
            return deliver(fail_edge(Verdict::LoopFound, e));

    auto comps = components(rs, EdgeSet{});
    if (comps.size() != 1)
        return deliver(fail_vertex(Verdict::Disconnected, comps[1].front()));

    std::vector<std::vector<Dart>> darts_at = build_darts_at(rs);
    CutAndBridges cb = find_cuts_and_bridges(rs, darts_at);
    if (!cb.cut_vertices.empty())
        return deliver(fail_vertex(Verdict::CutVertex, cb.cut_vertices.front()));
    if (!cb.bridges.empty())
        return deliver(fail_edge(Verdict::Bridge, cb.bridges.front()));

    // Genus: count phi orbits and check Euler's relation.
    const std::int32_t n_darts = rs.dart_count();
    std::vector<FaceId> face_of(static_cast<std::size_t>(n_darts), -1);
    std::int32_t n_faces = 0;
    for (Dart d = 0; d < n_darts; ++d) {
        if (face_of[static_cast<std::size_t>(d)] != -1) continue;
        FaceId f = n_faces++;
        Dart walk = d;
        do {
            face_of[static_cast<std::size_t>(walk)] = f;
            walk = rs.sigma[static_cast<std::size_t>(twin(walk))];
        } while (walk != d);
    }
    std::int32_t euler = rs.n_vertices - rs.n_edges + n_faces;
    if (euler != 2) {
        ValidationReport r;
        r.verdict = Verdict::GenusNonZero;
        r.euler_characteristic = euler;
        return deliver(r);
    }

    std::vector<FacialCycle> faces(static_cast<std::size_t>(n_faces));
    std::vector<bool> emitted(static_cast<std::size_t>(n_darts), false);
    for (Dart d = 0; d < n_darts; ++d) {
        if (emitted[static_cast<std::size_t>(d)]) continue;
        FacialCycle& fc = faces[static_cast<std::size_t>(face_of[static_cast<std::size_t>(d)])];
        fc.id = face_of[static_cast<std::size_t>(d)];
        Dart walk = d; // d is the smallest dart of its orbit by scan order
        do {
            emitted[static_cast<std::size_t>(walk)] = true;
            fc.darts.push_back(walk);
            fc.vertices.push_back(rs.vertex_of[static_cast<std::size_t>(walk)]);
            walk = rs.sigma[static_cast<std::size_t>(twin(walk))];
        } while (walk != d);
        // 2-connectivity makes every facial walk a cycle; anything else
        // here is a defect in the checks above.
        std::vector<VertexId> sorted = fc.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::logic_error("facial walk repeats a vertex on a validated map");
    }

    PlaneMultigraph g(rs, std::move(faces), std::move(face_of), std::move(darts_at));
    if (report) *report = ValidationReport{};
    return g;
}

std::vector<std::vector<VertexId>> components(const RotationSystem& rs,
                                              const EdgeSet& removed_edges) {
    std::vector<std::vector<VertexId>> groups;
    std::vector<bool> seen(static_cast<std::size_t>(rs.n_vertices), false);

    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(rs.n_vertices));
    for (EdgeId e = 0; e < rs.n_edges; ++e) {
        if (removed_edges.contains(e)) continue;
        VertexId a = rs.vertex_of[static_cast<std::size_t>(first_dart(e))];
        VertexId b = rs.vertex_of[static_cast<std::size_t>(second_dart(e))];
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }

    for (VertexId v = 0; v < rs.n_vertices; ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        std::vector<VertexId> group;
        std::vector<VertexId> queue{v};
        seen[static_cast<std::size_t>(v)] = true;
        while (!queue.empty()) {
            VertexId w = queue.back();
            queue.pop_back();
            group.push_back(w);
            for (VertexId u : adj[static_cast<std::size_t>(w)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    queue.push_back(u);
                }
            }
        }
        std::sort(group.begin(), group.end());
        groups.push_back(std::move(group));
    }
    return groups;
}

} // namespace planedual
