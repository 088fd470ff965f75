#pragma once

#include <string>

#include "planedual/rotation_system.hpp"

namespace planedual {

/// Undirected DOT document; every edge carries `label=<edge id>`.
std::string to_dot(const RotationSystem& rs);

/// Minimal undirected GraphML document with node and edge ids.
std::string to_graphml(const RotationSystem& rs);

} // namespace planedual
