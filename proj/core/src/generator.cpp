#include "planedual/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "planedual/pmap_io.hpp"

namespace planedual {

namespace {

PlaneMultigraph must_validate(const RotationSystem& rs, const char* context) {
    ValidationReport report;
    auto g = validate(rs, &report);
    if (!g)
        throw std::logic_error(std::string(context) + ": " + to_string(report.verdict));
    return std::move(*g);
}

// Insert d_new directly after d_at in the rotation of d_at's vertex.
void insert_after(RotationSystem& rs, Dart d_at, Dart d_new) {
    rs.sigma[static_cast<std::size_t>(d_new)] = rs.sigma[static_cast<std::size_t>(d_at)];
    rs.sigma[static_cast<std::size_t>(d_at)] = d_new;
}

Dart sigma_predecessor(const RotationSystem& rs, Dart d) {
    Dart p = d;
    while (rs.sigma[static_cast<std::size_t>(p)] != d)
        p = rs.sigma[static_cast<std::size_t>(p)];
    return p;
}

void insert_before(RotationSystem& rs, Dart d_at, Dart d_new) {
    insert_after(rs, sigma_predecessor(rs, d_at), d_new);
}

RotationSystem with_new_edge(const RotationSystem& rs, VertexId u, VertexId v) {
    RotationSystem out = rs;
    out.n_edges += 1;
    out.sigma.resize(static_cast<std::size_t>(out.dart_count()), -1);
    out.vertex_of.resize(static_cast<std::size_t>(out.dart_count()), -1);
    out.vertex_of[static_cast<std::size_t>(out.dart_count() - 2)] = u;
    out.vertex_of[static_cast<std::size_t>(out.dart_count() - 1)] = v;
    return out;
}

PlaneMultigraph apply_add_parallel(const PlaneMultigraph& g, const AddParallel& m) {
    if (m.edge < 0 || m.edge >= g.edge_count())
        throw MalformedMutation("edge " + std::to_string(m.edge) + " out of range");
    const Dart a = first_dart(m.edge);
    const Dart b = second_dart(m.edge);
    if (m.side_face != g.face_of(a) && m.side_face != g.face_of(b))
        throw MalformedMutation("face " + std::to_string(m.side_face) +
                                " does not border edge " + std::to_string(m.edge));

    auto [u, v] = g.endpoints(m.edge);
    RotationSystem rs = with_new_edge(g.rotation(), u, v);
    const Dart c = rs.dart_count() - 2; // at u
    const Dart d = rs.dart_count() - 1; // at v
    if (m.side_face == g.face_of(b)) {
        // Split the face containing dart b; the new 2-gon is {b, c}.
        insert_after(rs, a, c);
        insert_before(rs, b, d);
    } else {
        // Mirror image: the new 2-gon is {a, d}.
        insert_after(rs, b, d);
        insert_before(rs, a, c);
    }
    return must_validate(rs, "AddParallel");
}

PlaneMultigraph apply_add_chord(const PlaneMultigraph& g, const AddChord& m) {
    if (m.face < 0 || m.face >= g.face_count())
        throw MalformedMutation("face " + std::to_string(m.face) + " out of range");
    if (m.u == m.v) throw MalformedMutation("chord endpoints must differ");
    const FacialCycle& cycle = g.face(m.face);
    auto find_pos = [&](VertexId w) -> std::size_t {
        for (std::size_t i = 0; i < cycle.vertices.size(); ++i)
            if (cycle.vertices[i] == w) return i;
        throw MalformedMutation("vertex " + std::to_string(w) + " is not on face " +
                                std::to_string(m.face));
    };
    const Dart dart_u = cycle.darts[find_pos(m.u)];
    const Dart dart_v = cycle.darts[find_pos(m.v)];

    RotationSystem rs = with_new_edge(g.rotation(), m.u, m.v);
    const Dart c = rs.dart_count() - 2; // at u
    const Dart d = rs.dart_count() - 1; // at v
    // The face splits into the two arcs, each closed by one chord dart.
    insert_before(rs, dart_u, c);
    insert_before(rs, dart_v, d);
    return must_validate(rs, "AddChord");
}

PlaneMultigraph apply_subdivide(const PlaneMultigraph& g, const Subdivide& m) {
    if (m.edge < 0 || m.edge >= g.edge_count())
        throw MalformedMutation("edge " + std::to_string(m.edge) + " out of range");
    const Dart b = second_dart(m.edge);
    const VertexId v = g.vertex_of(b);
    const VertexId w = g.vertex_count();
    RotationSystem rs = with_new_edge(g.rotation(), w, v);
    rs.n_vertices += 1;
    const Dart c = rs.dart_count() - 2; // at the new vertex w
    const Dart d = rs.dart_count() - 1; // at v

    // Dart b moves to w; dart d takes b's slot in v's rotation.
    const Dart pred_b = sigma_predecessor(rs, b);
    const Dart next_b = rs.sigma[static_cast<std::size_t>(b)];
    rs.sigma[static_cast<std::size_t>(pred_b)] = d;
    rs.sigma[static_cast<std::size_t>(d)] = next_b;
    rs.vertex_of[static_cast<std::size_t>(b)] = w;
    rs.sigma[static_cast<std::size_t>(b)] = c;
    rs.sigma[static_cast<std::size_t>(c)] = b;
    return must_validate(rs, "Subdivide");
}

} // namespace

PlaneMultigraph start_graph(StartGraph s) {
    RotationSystem rs;
    if (s == StartGraph::D2) {
        rs.n_vertices = 2;
        rs.n_edges = 2;
        rs.sigma = {2, 3, 0, 1};
        rs.vertex_of = {0, 1, 0, 1};
    } else {
        rs.n_vertices = 3;
        rs.n_edges = 3;
        // Triangle 0-1-2 with edges (0,1), (1,2), (2,0).
        rs.sigma = {5, 2, 1, 4, 3, 0};
        rs.vertex_of = {0, 1, 1, 2, 2, 0};
    }
    return must_validate(rs, "start graph");
}

PlaneMultigraph apply_mutation(const PlaneMultigraph& g, const Mutation& m) {
    return std::visit(
        [&](const auto& concrete) {
            using T = std::decay_t<decltype(concrete)>;
            if constexpr (std::is_same_v<T, AddParallel>)
                return apply_add_parallel(g, concrete);
            else if constexpr (std::is_same_v<T, AddChord>)
                return apply_add_chord(g, concrete);
            else
                return apply_subdivide(g, concrete);
        },
        m);
}

namespace {

// Candidates of one kind, in canonical ascending order.
Mutation nth_add_parallel(const PlaneMultigraph& g, std::uint64_t index) {
    EdgeId e = static_cast<EdgeId>(index / 2);
    Dart side_dart = static_cast<int>(index % 2) == 0 ? first_dart(e) : second_dart(e);
    return AddParallel{e, g.face_of(side_dart)};
}

Mutation nth_add_chord(const PlaneMultigraph& g, std::uint64_t index) {
    for (const FacialCycle& c : g.faces()) {
        const std::uint64_t len = c.vertices.size();
        const std::uint64_t pairs = len * (len - 1) / 2;
        if (index >= pairs) {
            index -= pairs;
            continue;
        }
        for (std::size_t p = 0; p + 1 < len; ++p) {
            std::uint64_t tail = len - 1 - p;
            if (index < tail) {
                std::size_t q = p + 1 + static_cast<std::size_t>(index);
                return AddChord{c.id, c.vertices[p], c.vertices[q]};
            }
            index -= tail;
        }
    }
    throw std::logic_error("chord candidate index out of range");
}

std::uint64_t add_chord_candidates(const PlaneMultigraph& g) {
    std::uint64_t total = 0;
    for (const FacialCycle& c : g.faces()) {
        std::uint64_t len = c.vertices.size();
        total += len * (len - 1) / 2;
    }
    return total;
}

} // namespace

PlaneMultigraph generate(const GenConfig& cfg) {
    const std::uint64_t total_weight =
        std::uint64_t(cfg.weights[0]) + cfg.weights[1] + cfg.weights[2];
    if (cfg.steps < 0) throw std::invalid_argument("steps must be non-negative");
    if (cfg.steps > 0 && total_weight == 0)
        throw std::invalid_argument("at least one mutation weight must be positive");

    PlaneMultigraph g = start_graph(cfg.start);
    SplitMix64 rng(cfg.seed);
    for (std::int32_t step = 0; step < cfg.steps; ++step) {
        std::uint64_t r = rng.next_below(total_weight);
        Mutation m;
        if (r < cfg.weights[0]) {
            m = nth_add_parallel(g, rng.next_below(2ull * static_cast<std::uint64_t>(g.edge_count())));
        } else if (r < std::uint64_t(cfg.weights[0]) + cfg.weights[1]) {
            m = nth_add_chord(g, rng.next_below(add_chord_candidates(g)));
        } else {
            m = Subdivide{static_cast<EdgeId>(
                rng.next_below(static_cast<std::uint64_t>(g.edge_count())))};
        }
        g = apply_mutation(g, m);
    }

    RotationSystem canonical = canonicalize_vertex_ids(g.rotation());
    return must_validate(canonical, "generate");
}

} // namespace planedual
