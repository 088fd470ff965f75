#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "planedual/generator.hpp"
#include "planedual/plane_multigraph.hpp"
#include "planedual/pmap_io.hpp"

#ifndef PLANEDUAL_FIXTURE_DIR
#define PLANEDUAL_FIXTURE_DIR "fixtures"
#endif

namespace testsupport {

inline std::string fixture_dir() {
    if (const char* env = std::getenv("PLANEDUAL_FIXTURES")) return env;
    return PLANEDUAL_FIXTURE_DIR;
}

inline std::string fixture_path(const std::string& name) {
    return fixture_dir() + "/" + name + ".pmap";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_text(const std::string& name) {
    return read_file(fixture_path(name));
}

inline planedual::PlaneMultigraph load_fixture(const std::string& name) {
    auto rs = planedual::parse_rotation_system(fixture_text(name));
    auto g = planedual::validate(rs);
    if (!g) throw std::runtime_error("fixture " + name + " does not validate");
    return *g;
}

/// The cycle C_n: edge i joins vertices i and (i+1) mod n, vertex labels
/// canonical. Same layout as the c3/c4 fixtures.
inline planedual::PlaneMultigraph make_cycle(std::int32_t n) {
    planedual::RotationSystem rs;
    rs.n_vertices = n;
    rs.n_edges = n;
    rs.sigma.resize(static_cast<std::size_t>(2 * n));
    rs.vertex_of.resize(static_cast<std::size_t>(2 * n));
    for (std::int32_t i = 0; i < n; ++i) {
        planedual::Dart out_dart = 2 * i;                      // at vertex i
        planedual::Dart in_dart = 2 * ((i + n - 1) % n) + 1;   // at vertex i
        rs.vertex_of[static_cast<std::size_t>(out_dart)] = i;
        rs.vertex_of[static_cast<std::size_t>(in_dart)] = i;
        rs.sigma[static_cast<std::size_t>(out_dart)] = in_dart;
        rs.sigma[static_cast<std::size_t>(in_dart)] = out_dart;
    }
    auto g = planedual::validate(rs);
    if (!g) throw std::runtime_error("cycle fixture does not validate");
    return *g;
}

/// Corpus instance used across the property tests and the acceptance
/// suite. Low seeds sweep every step count 0..8, the rest use all 8
/// mutation steps; either way n stays at most 2 + 8 = 10.
inline planedual::PlaneMultigraph corpus_instance(std::uint64_t seed) {
    planedual::GenConfig cfg;
    cfg.seed = seed;
    cfg.steps = seed <= 50 ? static_cast<std::int32_t>(seed % 9) : 8;
    return planedual::generate(cfg);
}

} // namespace testsupport
