#include <doctest.h>

#include <set>

#include "planedual/partitions.hpp"
#include "support/fixtures.hpp"

using namespace planedual;
using testsupport::load_fixture;

namespace {

Bipartition make(const PlaneMultigraph& g, std::initializer_list<VertexId> s) {
    return Bipartition::from_s_vertices(g.vertex_count(), std::vector<VertexId>(s));
}

// All unordered bipartitions of g, vertex 0 kept in S.
std::vector<Bipartition> all_bipartitions(const PlaneMultigraph& g) {
    std::vector<Bipartition> out;
    const std::int32_t n = g.vertex_count();
    for (std::uint64_t mask = 1; mask < (1ull << (n - 1)); ++mask) {
        std::vector<bool> in_s(static_cast<std::size_t>(n), true);
        for (std::int32_t v = 1; v < n; ++v)
            if (mask & (1ull << (v - 1))) in_s[static_cast<std::size_t>(v)] = false;
        out.push_back(Bipartition::from_membership(std::move(in_s)));
    }
    return out;
}

} // namespace

TEST_CASE("bipartitions are unordered and both sides must be nonempty") {
    auto c4 = load_fixture("c4");
    CHECK(make(c4, {0, 1}) == Bipartition::from_s_vertices(4, {2, 3}));
    CHECK_THROWS_AS(Bipartition::from_s_vertices(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(Bipartition::from_s_vertices(4, {0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Bipartition::from_s_vertices(4, {7}), std::invalid_argument);
}

TEST_CASE("induced_kind classification") {
    auto k4 = load_fixture("k4");
    CHECK(induced_kind(k4, std::vector<VertexId>{0, 1}) == SubgraphKind::Tree);
    CHECK(induced_kind(k4, std::vector<VertexId>{1, 2, 3}) == SubgraphKind::Cyclic);
    CHECK(induced_kind(k4, std::vector<VertexId>{0}) == SubgraphKind::Tree);
    CHECK_THROWS_AS(induced_kind(k4, std::vector<VertexId>{}), std::invalid_argument);

    auto c4 = load_fixture("c4");
    CHECK(induced_kind(c4, std::vector<VertexId>{0, 2}) == SubgraphKind::Forest);

    auto doubled = load_fixture("doubled_triangle");
    CHECK(induced_kind(doubled, std::vector<VertexId>{0, 1}) == SubgraphKind::Cyclic); // induced 2-gon
    CHECK(induced_kind(doubled, std::vector<VertexId>{1, 2}) == SubgraphKind::Cyclic);
    CHECK(induced_kind(doubled, std::vector<VertexId>{0, 2}) == SubgraphKind::Cyclic);
}

TEST_CASE("cross_edges and the edge partition identity") {
    auto c4 = load_fixture("c4");
    CHECK(cross_edges(c4, make(c4, {0, 1})) == EdgeSet{1, 3});

    auto k4 = load_fixture("k4");
    CHECK(cross_edges(k4, make(k4, {0, 1})).size() == 4);

    auto d2 = load_fixture("d2");
    CHECK(cross_edges(d2, make(d2, {0})) == EdgeSet{0, 1});

    // {E(S), E(T), E[S,T]} partitions E(G) on generated instances.
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = testsupport::corpus_instance(seed);
        for (const Bipartition& p : all_bipartitions(g)) {
            std::int32_t inside = 0;
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                auto [a, b] = g.endpoints(e);
                if (p.in_s(a) == p.in_s(b)) ++inside;
            }
            CHECK(inside + static_cast<std::int32_t>(cross_edges(g, p).size()) ==
                  g.edge_count());
        }
    }
}

TEST_CASE("facial_intersection classifies marked arcs") {
    auto c4 = load_fixture("c4");
    const FacialCycle& face = c4.face(0); // vertex sequence 0,1,2,3
    REQUIRE(face.vertices == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(facial_intersection(c4, std::vector<VertexId>{0, 1}, face) == IntersectionKind::Path);
    CHECK(facial_intersection(c4, std::vector<VertexId>{0, 2}, face) ==
          IntersectionKind::Scattered);
    CHECK(facial_intersection(c4, std::vector<VertexId>{0, 1, 2, 3}, face) ==
          IntersectionKind::WholeCycle);
    CHECK(facial_intersection(c4, std::vector<VertexId>{2}, face) == IntersectionKind::Vertex);
    CHECK(facial_intersection(c4, std::vector<VertexId>{0, 3}, face) == IntersectionKind::Path);

    auto k4 = load_fixture("k4");
    // Face 0 of K4 is the triangle 0,1,2; vertex 3 misses it.
    CHECK(facial_intersection(k4, std::vector<VertexId>{3}, k4.face(0)) ==
          IntersectionKind::Empty);
}

TEST_CASE("check_condition on hand-verified partitions") {
    auto k4 = load_fixture("k4");
    Bipartition good = make(k4, {0, 1});
    for (int which = 1; which <= 4; ++which) CHECK(check_condition(k4, good, which));
    Bipartition bad = make(k4, {0});
    CHECK_FALSE(check_condition(k4, bad, 3)); // T induces a triangle
    CHECK_FALSE(check_condition(k4, bad, 1));
    CHECK_FALSE(check_condition(k4, bad, 2));
    CHECK_FALSE(check_condition(k4, bad, 4));

    auto c4 = load_fixture("c4");
    Bipartition arc = make(c4, {0, 1});
    for (int which = 1; which <= 4; ++which) CHECK(check_condition(c4, arc, which));
    Bipartition opposite = make(c4, {0, 2});
    for (int which = 1; which <= 4; ++which) CHECK_FALSE(check_condition(c4, opposite, which));

    CHECK_THROWS_AS(check_condition(c4, arc, 5), std::invalid_argument);
}

TEST_CASE("master equivalence on fixtures") {
    for (const char* name : {"d2", "c3", "d3", "c4", "k4", "doubled_triangle", "cube"}) {
        auto g = load_fixture(name);
        for (const Bipartition& p : all_bipartitions(g)) {
            bool c1 = check_condition(g, p, 1);
            for (int which = 2; which <= 4; ++which)
                CHECK_MESSAGE(check_condition(g, p, which) == c1, name);
        }
    }
}

TEST_CASE("certificate normalization and parsing") {
    auto cert = HamiltonCycleCertificate::from_steps({{2, 2}, {1, 4}, {3, 3}, {0, 1}});
    CHECK(cert.to_string() == "0:1,2:2,1:4,3:3");
    CHECK(HamiltonCycleCertificate::parse("0:1,2:2,1:4,3:3") == cert);
    // The reversed walk normalizes identically.
    auto reversed = HamiltonCycleCertificate::from_steps({{0, 3}, {3, 4}, {1, 2}, {2, 1}});
    CHECK(reversed.to_string() == "0:1,2:2,1:4,3:3");

    // 2-cycles orient toward the smaller edge.
    auto lens = HamiltonCycleCertificate::from_steps({{1, 0}, {0, 3}});
    CHECK(lens.to_string() == "0:0,1:3");

    CHECK_THROWS_AS(HamiltonCycleCertificate::parse("0:1"), InvalidCertificate);
    CHECK_THROWS_AS(HamiltonCycleCertificate::parse("0:1,0:2"), InvalidCertificate);
    CHECK_THROWS_AS(HamiltonCycleCertificate::parse("0:1,1:1"), InvalidCertificate);
    CHECK_THROWS_AS(HamiltonCycleCertificate::parse("junk"), InvalidCertificate);
}

TEST_CASE("partition_to_dual_cycle on hand-traced fixtures") {
    auto c4 = load_fixture("c4");
    CHECK(partition_to_dual_cycle(c4, make(c4, {0})).to_string() == "0:0,1:3");

    auto k4 = load_fixture("k4");
    CHECK(partition_to_dual_cycle(k4, make(k4, {0, 1})).to_string() == "0:1,2:2,1:4,3:3");
    CHECK(partition_to_dual_cycle(k4, make(k4, {0, 2})).to_string() == "0:0,1:2,2:5,3:3");
    CHECK(partition_to_dual_cycle(k4, make(k4, {0, 3})).to_string() == "0:0,1:4,3:5,2:1");
}

TEST_CASE("partition_to_dual_cycle rejects violated preconditions with the clause") {
    auto doubled = load_fixture("doubled_triangle");
    try {
        partition_to_dual_cycle(doubled, make(doubled, {0}));
        FAIL("expected ConditionViolated");
    } catch (const ConditionViolated& ex) {
        CHECK(ex.clause() == "T induces a cycle");
    }

    auto c4 = load_fixture("c4");
    try {
        partition_to_dual_cycle(c4, make(c4, {0, 2}));
        FAIL("expected ConditionViolated");
    } catch (const ConditionViolated& ex) {
        CHECK(ex.clause().find("Scattered") != std::string::npos);
    }
}

TEST_CASE("dual_cycle_to_partition inverts the construction") {
    auto c4 = load_fixture("c4");
    Bipartition p = make(c4, {0});
    CHECK(dual_cycle_to_partition(c4, partition_to_dual_cycle(c4, p)) == p);

    auto k4 = load_fixture("k4");
    for (auto s : {std::initializer_list<VertexId>{0, 1}, {0, 2}, {0, 3}}) {
        Bipartition q = make(k4, s);
        CHECK(dual_cycle_to_partition(k4, partition_to_dual_cycle(k4, q)) == q);
    }
}

TEST_CASE("dual_cycle_to_partition rejects malformed certificates") {
    auto k4 = load_fixture("k4");
    // Visits only three of the four faces.
    CHECK_THROWS_AS(dual_cycle_to_partition(k4, HamiltonCycleCertificate::parse("0:1,2:2,1:0")),
                    InvalidCertificate);
    // Edge 0 does not join faces 0 and 2.
    CHECK_THROWS_AS(
        dual_cycle_to_partition(k4, HamiltonCycleCertificate::parse("0:0,2:2,1:4,3:3")),
        InvalidCertificate);
    // Unknown face id.
    CHECK_THROWS_AS(
        dual_cycle_to_partition(k4, HamiltonCycleCertificate::parse("0:1,2:2,1:4,9:3")),
        InvalidCertificate);
}

TEST_CASE("round trips across every satisfying bipartition of generated instances") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto g = testsupport::corpus_instance(seed);
        for (const Bipartition& p : all_bipartitions(g)) {
            if (!check_condition(g, p, 1)) continue;
            auto cert = partition_to_dual_cycle(g, p);
            CHECK(dual_cycle_to_partition(g, cert) == p);
            // Condition-satisfying cross edges are a bond whose dual
            // image is a spanning cycle; every face sees exactly two.
            DualPair pair = dual(g);
            EdgeSet cross = cross_edges(g, p);
            CHECK(is_bond(g, cross));
            CHECK(is_cycle_edge_set(pair.dual, cross));
            for (const FacialCycle& f : g.faces()) {
                std::int32_t crossing = 0;
                for (Dart d : f.darts)
                    if (cross.contains(edge_of(d))) ++crossing;
                CHECK(crossing == 2);
            }
        }
    }
}
