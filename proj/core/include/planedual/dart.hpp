#pragma once

#include <cstdint>

namespace planedual {

/// Darts are the half-edges of a combinatorial map. Edge i owns darts
/// 2i and 2i+1, so the edge pairing (the involution alpha) is d XOR 1.
using Dart = std::int32_t;
using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using FaceId = std::int32_t;

constexpr Dart twin(Dart d) noexcept { return d ^ 1; }
constexpr EdgeId edge_of(Dart d) noexcept { return d >> 1; }
constexpr Dart first_dart(EdgeId e) noexcept { return 2 * e; }
constexpr Dart second_dart(EdgeId e) noexcept { return 2 * e + 1; }

} // namespace planedual
