#pragma once

#include "planedual/edge_set.hpp"
#include "planedual/plane_multigraph.hpp"

namespace planedual {

/// A graph together with its dual. Both maps share the dart set, so the
/// edge correspondence e <-> e* is the identity on edge ids: an edge set
/// of one is directly an edge set of the other. Dual vertex ids equal
/// primal face ids.
struct DualPair {
    PlaneMultigraph primal;
    PlaneMultigraph dual;

    static constexpr EdgeId dual_edge(EdgeId e) { return e; }
};

/// Construct the dual map: sigma* = phi over the same darts. The family
/// is closed under duality, so the result always validates; the dual's
/// faces correspond to the primal's vertices. Applying dual twice gives
/// back the identical permutation, with vertex ids relabeled canonically
/// (ascending smallest dart).
DualPair dual(const PlaneMultigraph& g);

/// True iff cut is a minimal nonempty edge cut: deleting it leaves
/// exactly two components and every edge of the cut joins them.
bool is_bond(const PlaneMultigraph& g, const EdgeSet& cut);

/// True iff the edges form a single cycle: every touched vertex has
/// degree exactly 2 within the set (parallel edges form 2-gons) and the
/// touched subgraph is connected.
bool is_cycle_edge_set(const PlaneMultigraph& g, const EdgeSet& edges);

} // namespace planedual
