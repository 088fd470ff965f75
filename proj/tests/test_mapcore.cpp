#include <doctest.h>

#include "planedual/generator.hpp"
#include "planedual/plane_multigraph.hpp"
#include "planedual/pmap_io.hpp"
#include "support/fixtures.hpp"

using namespace planedual;
using testsupport::fixture_text;
using testsupport::load_fixture;

namespace {

// Two triangles sharing vertex 0; a valid sphere embedding whose only
// defect is the shared vertex.
RotationSystem bowtie() {
    RotationSystem rs;
    rs.n_vertices = 5;
    rs.n_edges = 6;
    rs.sigma.resize(12);
    rs.vertex_of = {0, 1, 1, 2, 2, 0, 0, 3, 3, 4, 4, 0};
    auto cycle = [&rs](std::initializer_list<Dart> darts) {
        const Dart* data = darts.begin();
        for (std::size_t i = 0; i < darts.size(); ++i)
            rs.sigma[static_cast<std::size_t>(data[i])] = data[(i + 1) % darts.size()];
    };
    cycle({0, 5, 6, 11});
    cycle({1, 2});
    cycle({3, 4});
    cycle({7, 8});
    cycle({9, 10});
    return rs;
}

RotationSystem two_disjoint_triangles() {
    RotationSystem rs;
    rs.n_vertices = 6;
    rs.n_edges = 6;
    rs.sigma = {5, 2, 1, 4, 3, 0, 11, 8, 7, 10, 9, 6};
    rs.vertex_of = {0, 1, 1, 2, 2, 0, 3, 4, 4, 5, 5, 3};
    return rs;
}

RotationSystem single_edge() {
    RotationSystem rs;
    rs.n_vertices = 2;
    rs.n_edges = 1;
    rs.sigma = {0, 1};
    rs.vertex_of = {0, 1};
    return rs;
}

} // namespace

TEST_CASE("parse reads the dipole document") {
    RotationSystem rs = parse_rotation_system(fixture_text("d2"));
    CHECK(rs.n_vertices == 2);
    CHECK(rs.n_edges == 2);
    CHECK(rs.sigma == std::vector<Dart>{2, 3, 0, 1});
    CHECK(rs.vertex_of == std::vector<VertexId>{0, 1, 0, 1});
}

TEST_CASE("parse reads the triangle document") {
    RotationSystem rs = parse_rotation_system(fixture_text("c3"));
    CHECK(rs.n_vertices == 3);
    CHECK(rs.n_edges == 3);
}

TEST_CASE("parse skips comments and blank lines") {
    RotationSystem rs = parse_rotation_system(
        "pmap 1\n# a comment\nV 2\n\nE 2\nsigma 0: 0 2\nsigma 1: 1 3\n");
    CHECK(rs.n_vertices == 2);
}

TEST_CASE("parse rejects a dart listed under two vertices") {
    std::string doc = "pmap 1\nV 3\nE 3\nsigma 0: 0 5\nsigma 1: 1 2 4\nsigma 2: 3 4\n";
    try {
        parse_rotation_system(doc);
        FAIL("expected ParseError");
    } catch (const ParseError& ex) {
        CHECK(ex.kind() == ParseErrorKind::DartRepeated);
        CHECK(ex.line() == 6);
    }
}

TEST_CASE("parse reports missing darts, bad headers and stray tokens") {
    CHECK_THROWS_AS(parse_rotation_system("pmap 2\nV 1\nE 1\nsigma 0: 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_rotation_system("pmap 1\nV 2\nE 2\nsigma 0: 0 2\nsigma 1: 1\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_rotation_system("pmap 1\nV x\nE 2\nsigma 0: 0 2\nsigma 1: 1 3\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_rotation_system("pmap 1\nV 0\nE 1\n"), ParseError);
    try {
        parse_rotation_system("pmap 1\nV 2\nE 2\nsigma 0: 0 2\nsigma 1: 1\n");
    } catch (const ParseError& ex) {
        CHECK(ex.kind() == ParseErrorKind::DartMissing);
    }
}

TEST_CASE("serialize emits the canonical document and round-trips") {
    for (const char* name : {"d2", "c3", "d3", "c4", "k4", "doubled_triangle", "cube"}) {
        std::string text = fixture_text(name);
        RotationSystem rs = parse_rotation_system(text);
        CHECK(serialize(rs) == text);              // canonical documents reproduce
        CHECK(parse_rotation_system(serialize(rs)) == rs); // parse∘serialize = id
    }
}

TEST_CASE("serialize rotates each cycle to its smallest dart") {
    RotationSystem rs = parse_rotation_system("pmap 1\nV 2\nE 2\nsigma 0: 2 0\nsigma 1: 3 1\n");
    CHECK(serialize(rs) == fixture_text("d2"));
}

TEST_CASE("validate accepts the family fixtures") {
    for (const char* name : {"d2", "c3", "d3", "c4", "k4", "doubled_triangle", "cube"}) {
        ValidationReport report;
        auto g = validate(parse_rotation_system(fixture_text(name)), &report);
        REQUIRE_MESSAGE(g.has_value(), name);
        CHECK(report.ok());
        CHECK(g->vertex_count() - g->edge_count() + g->face_count() == 2);
    }
}

TEST_CASE("validate: triangle has two faces") {
    auto g = load_fixture("c3");
    CHECK(g.face_count() == 2);
}

TEST_CASE("validate flags a loop edge") {
    RotationSystem rs;
    rs.n_vertices = 2;
    rs.n_edges = 2;
    // Edge 0 has both darts at vertex 0; edge 1 joins the vertices.
    rs.sigma = {1, 2, 0, 3};
    rs.vertex_of = {0, 0, 0, 1};
    ValidationReport report;
    CHECK_FALSE(validate(rs, &report).has_value());
    CHECK(report.verdict == Verdict::LoopFound);
    CHECK(report.edge == 0);
}

TEST_CASE("validate flags the bowtie's shared vertex") {
    ValidationReport report;
    CHECK_FALSE(validate(bowtie(), &report).has_value());
    CHECK(report.verdict == Verdict::CutVertex);
    CHECK(report.vertex == 0);
}

TEST_CASE("validate flags a single edge as a bridge") {
    ValidationReport report;
    CHECK_FALSE(validate(single_edge(), &report).has_value());
    CHECK(report.verdict == Verdict::Bridge);
    CHECK(report.edge == 0);
}

TEST_CASE("validate flags disconnection before cut analysis") {
    ValidationReport report;
    CHECK_FALSE(validate(two_disjoint_triangles(), &report).has_value());
    CHECK(report.verdict == Verdict::Disconnected);
    CHECK(report.vertex == 3);
}

TEST_CASE("validate flags the torus rotation of K4") {
    ValidationReport report;
    CHECK_FALSE(validate(parse_rotation_system(fixture_text("k4_torus")), &report).has_value());
    CHECK(report.verdict == Verdict::GenusNonZero);
    CHECK(report.euler_characteristic == 0); // 4 - 6 + 2
}

TEST_CASE("validate flags malformed permutations") {
    RotationSystem rs;
    rs.n_vertices = 2;
    rs.n_edges = 2;
    rs.sigma = {2, 3, 2, 1}; // dart 2 has two preimages
    rs.vertex_of = {0, 1, 0, 1};
    ValidationReport report;
    CHECK_FALSE(validate(rs, &report).has_value());
    CHECK(report.verdict == Verdict::MalformedPermutation);

    // Orbit crossing two vertices.
    rs.sigma = {1, 0, 3, 2};
    rs.vertex_of = {0, 1, 0, 1};
    CHECK_FALSE(validate(rs, &report).has_value());
    CHECK(report.verdict == Verdict::MalformedPermutation);

    // Two sigma cycles inside one vertex.
    rs.n_vertices = 1;
    rs.n_edges = 2;
    rs.sigma = {1, 0, 3, 2};
    rs.vertex_of = {0, 0, 0, 0};
    CHECK_FALSE(validate(rs, &report).has_value());
    CHECK(report.verdict == Verdict::MalformedPermutation);
}

TEST_CASE("faces of the fixtures") {
    auto c3 = load_fixture("c3");
    REQUIRE(c3.face_count() == 2);
    CHECK(c3.face(0).length() == 3);
    CHECK(c3.face(1).length() == 3);

    auto d3 = load_fixture("d3");
    REQUIRE(d3.face_count() == 3);
    for (const FacialCycle& f : d3.faces()) CHECK(f.length() == 2);

    auto k4 = load_fixture("k4");
    REQUIRE(k4.face_count() == 4);
    for (const FacialCycle& f : k4.faces()) CHECK(f.length() == 3);
}

TEST_CASE("every dart lies on exactly one face and one vertex orbit") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = testsupport::corpus_instance(seed);
        std::vector<int> face_hits(static_cast<std::size_t>(g.rotation().dart_count()), 0);
        for (const FacialCycle& f : g.faces())
            for (Dart d : f.darts) ++face_hits[static_cast<std::size_t>(d)];
        for (int hits : face_hits) CHECK(hits == 1);

        std::vector<int> vertex_hits(static_cast<std::size_t>(g.rotation().dart_count()), 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (Dart d : g.darts_at(v)) ++vertex_hits[static_cast<std::size_t>(d)];
        for (int hits : vertex_hits) CHECK(hits == 1);
    }
}

TEST_CASE("facial walks never repeat a vertex") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = testsupport::corpus_instance(seed);
        for (const FacialCycle& f : g.faces()) {
            std::vector<VertexId> sorted = f.vertices;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        }
    }
}

TEST_CASE("parse∘serialize is the identity on generated instances") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        auto g = testsupport::corpus_instance(seed);
        CHECK(parse_rotation_system(serialize(g.rotation())) == g.rotation());
    }
}

TEST_CASE("parser survives random document corruption") {
    // Every corrupted document either parses (and then serializes and
    // validates without incident) or raises ParseError; nothing else.
    planedual::SplitMix64 rng(0xfeedface);
    const char alphabet[] = "0123456789 :#sigmaVE\npmap";
    for (const char* name : {"d2", "c3", "k4", "cube"}) {
        std::string original = fixture_text(name);
        for (int round = 0; round < 250; ++round) {
            std::string text = original;
            int edits = 1 + static_cast<int>(rng.next_below(4));
            for (int k = 0; k < edits; ++k)
                text[rng.next_below(text.size())] =
                    alphabet[rng.next_below(sizeof(alphabet) - 1)];
            try {
                RotationSystem rs = parse_rotation_system(text);
                ValidationReport report;
                auto g = validate(rs, &report);
                CHECK((g.has_value() || !report.ok()));
                CHECK(parse_rotation_system(serialize(rs)) == rs);
            } catch (const ParseError&) {
                // fine
            }
        }
    }
}

TEST_CASE("components with removed edge sets") {
    auto c4 = load_fixture("c4");
    auto opposite = components(c4.rotation(), EdgeSet{0, 2});
    REQUIRE(opposite.size() == 2);
    CHECK(opposite[0].size() == 2);
    CHECK(opposite[1].size() == 2);

    CHECK(components(c4.rotation(), EdgeSet{0}).size() == 1);
    CHECK(components(c4.rotation(), EdgeSet{0, 1, 2, 3}).size() == 4);
}

TEST_CASE("canonicalize_vertex_ids orders labels by smallest dart") {
    // d2 with its two vertex labels swapped.
    RotationSystem swapped = parse_rotation_system("pmap 1\nV 2\nE 2\nsigma 1: 0 2\nsigma 0: 1 3\n");
    CHECK(serialize(canonicalize_vertex_ids(swapped)) == fixture_text("d2"));
}
