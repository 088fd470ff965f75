#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "planedual/partitions.hpp"

namespace planedual {

enum class VertexOrderPolicy { InputOrder, DegreeDescending };

struct SearchConfig {
    VertexOrderPolicy order = VertexOrderPolicy::InputOrder;
    /// Bound on backtracking nodes expanded; unset means unbounded.
    std::optional<std::int64_t> node_budget;
    /// Keep searching after the first hit and collect every solution.
    bool enumerate_all = false;
    /// Mid-tree cuts (incremental cycle detection, dead-component cut).
    /// With pruning off the search descends blindly and tests full
    /// leaves, which must reach the same verdict.
    bool prune = true;
    /// Record a signature per expanded node (small instances only).
    bool trace_nodes = false;
    /// >1 splits the branch on the second assigned vertex across two
    /// workers; results merge in branch order, so the outcome is the
    /// same partition the sequential search finds. The node budget then
    /// applies per branch.
    int workers = 1;
};

struct SearchStats {
    std::int64_t nodes_expanded = 0;
    std::int64_t pruned_cycle_s = 0;
    std::int64_t pruned_cycle_t = 0;
    std::int64_t pruned_dead_s = 0;
    std::int64_t pruned_dead_t = 0;
    std::vector<std::uint64_t> visited; ///< node signatures when trace_nodes

    std::int64_t pruned_total() const {
        return pruned_cycle_s + pruned_cycle_t + pruned_dead_s + pruned_dead_t;
    }
};

enum class SearchResult { Found, Exhausted, BudgetExceeded };

const char* to_string(SearchResult r);

struct SearchOutcome {
    SearchResult result = SearchResult::Exhausted;
    std::optional<Bipartition> partition; ///< first solution in branch order
    std::vector<Bipartition> all_found;   ///< populated when enumerate_all
    SearchStats stats;
};

/// Backtracking search for a bipartition with both sides inducing trees.
/// Vertex 0 is pinned to S (bipartitions are unordered), remaining
/// vertices are assigned in the configured order, side S before side T,
/// so the found witness is deterministic. Exhausted is reported only
/// when the whole space was covered.
SearchOutcome find_tree_partition(const PlaneMultigraph& g, const SearchConfig& cfg = {});

struct PartitionEnumeration {
    std::vector<Bipartition> partitions;
    bool complete = true; ///< false when the limit stopped the scan

    std::int64_t count() const { return static_cast<std::int64_t>(partitions.size()); }
};

/// Exhaustive scan of all 2^(n-1) - 1 unordered bipartitions, collecting
/// those whose sides both induce trees. Intended for n up to ~20; the
/// optional limit caps the number collected and is reported distinctly
/// from completion.
PartitionEnumeration enumerate_tree_partitions(const PlaneMultigraph& g,
                                               std::optional<std::int64_t> limit = {});

/// All undirected, unrooted Hamilton cycles of dual(g), as normalized
/// certificates in ascending string order. Parallel dual edges give
/// distinct cycles. Exhaustive backtracking; intended for duals with up
/// to ~14 vertices.
std::vector<HamiltonCycleCertificate> enumerate_dual_hamilton_cycles(const PlaneMultigraph& g);

/// Hamiltonicity through the equivalence: search dual(h) for a tree-tree
/// bipartition and map its cross edges back through the identity edge
/// correspondence. The returned set is a cycle of h touching every
/// vertex; nullopt iff dual(h) has no tree-tree bipartition.
std::optional<EdgeSet> hamilton_via_duality(const PlaneMultigraph& h);

/// Full consistency check: all four conditions hold for p, cert is
/// exactly partition_to_dual_cycle(g, p), and converting cert back
/// yields p again.
bool verify_certificate(const PlaneMultigraph& g, const Bipartition& p,
                        const HamiltonCycleCertificate& cert);

} // namespace planedual
