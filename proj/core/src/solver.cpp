#include "planedual/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "planedual/union_find.hpp"

namespace planedual {

const char* to_string(SearchResult r) {
    switch (r) {
    case SearchResult::Found: return "found";
    case SearchResult::Exhausted: return "exhausted";
    case SearchResult::BudgetExceeded: return "budget_exceeded";
    }
    return "?";
}

namespace {

constexpr int kSideS = 0;
constexpr int kSideT = 1;
constexpr int kUnassigned = -1;

std::vector<VertexId> assignment_order(const PlaneMultigraph& g, VertexOrderPolicy policy) {
    std::vector<VertexId> order;
    for (VertexId v = 1; v < g.vertex_count(); ++v) order.push_back(v);
    if (policy == VertexOrderPolicy::DegreeDescending) {
        std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            return g.degree(a) > g.degree(b);
        });
    }
    return order;
}

class Searcher {
public:
    Searcher(const PlaneMultigraph& g, const SearchConfig& cfg, std::vector<VertexId> order)
        : g_(g),
          cfg_(cfg),
          order_(std::move(order)),
          side_(static_cast<std::size_t>(g.vertex_count()), kUnassigned),
          dsu_{UnionFindUndo(g.vertex_count()), UnionFindUndo(g.vertex_count())} {
        adj_.resize(static_cast<std::size_t>(g.vertex_count()));
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            for (Dart d : g.darts_at(v))
                adj_[static_cast<std::size_t>(v)].push_back(g.vertex_of(twin(d)));
        // Vertex 0 is pinned to S: bipartitions are unordered, so this
        // halves the space without losing any solution.
        side_[0] = kSideS;
        comp_count_[kSideS] = 1;
    }

    SearchOutcome run(std::optional<int> forced_first_side) {
        if (forced_first_side && !order_.empty()) {
            int s = *forced_first_side;
            if (expand(0, s)) descend(1);
            // A pruned forced branch is simply exhausted.
        } else {
            descend(0);
        }
        SearchOutcome out;
        out.stats = std::move(stats_);
        out.all_found = std::move(found_);
        if (!out.all_found.empty()) out.partition = out.all_found.front();
        if (out.partition && !cfg_.enumerate_all)
            out.result = SearchResult::Found;
        else if (budget_hit_)
            out.result = SearchResult::BudgetExceeded;
        else
            out.result = out.partition ? SearchResult::Found : SearchResult::Exhausted;
        if (!cfg_.enumerate_all && out.all_found.size() > 1)
            out.all_found.erase(out.all_found.begin() + 1, out.all_found.end());
        return out;
    }

private:
    bool stop_requested() const {
        return budget_hit_ || (!cfg_.enumerate_all && !found_.empty());
    }

    void descend(std::size_t depth) {
        if (stop_requested()) return;
        if (depth == order_.size()) {
            visit_leaf();
            return;
        }
        for (int s : {kSideS, kSideT}) {
            if (stop_requested()) return;
            if (expand(depth, s)) {
                descend(depth + 1);
                retract(depth);
            }
        }
    }

    // Assign order_[depth]; false when the node was pruned (nothing to
    // retract in that case). Counts the node either way.
    bool expand(std::size_t depth, int s) {
        if (cfg_.node_budget && stats_.nodes_expanded >= *cfg_.node_budget) {
            budget_hit_ = true;
            return false;
        }
        ++stats_.nodes_expanded;
        if (cfg_.trace_nodes) trace(depth, s);

        VertexId v = order_[depth];
        if (!cfg_.prune) {
            side_[static_cast<std::size_t>(v)] = s;
            return true;
        }

        std::size_t mark = dsu_[s].checkpoint();
        std::int32_t merges = 0;
        for (VertexId u : adj_[static_cast<std::size_t>(v)]) {
            if (side_[static_cast<std::size_t>(u)] != s) continue;
            if (dsu_[s].unite(v, u)) {
                ++merges;
            } else {
                // Already connected inside the side: closing a cycle.
                dsu_[s].rollback(mark);
                (s == kSideS ? stats_.pruned_cycle_s : stats_.pruned_cycle_t) += 1;
                return false;
            }
        }
        side_[static_cast<std::size_t>(v)] = s;
        comp_count_[s] += 1 - merges;
        undo_merges_[depth] = merges;

        if (dead_component(kSideS)) {
            stats_.pruned_dead_s += 1;
            retract(depth);
            return false;
        }
        if (dead_component(kSideT)) {
            stats_.pruned_dead_t += 1;
            retract(depth);
            return false;
        }
        return true;
    }

    void retract(std::size_t depth) {
        VertexId v = order_[depth];
        int s = side_[static_cast<std::size_t>(v)];
        side_[static_cast<std::size_t>(v)] = kUnassigned;
        if (!cfg_.prune) return;
        std::int32_t merges = undo_merges_[depth];
        dsu_[s].rollback(dsu_[s].checkpoint() - static_cast<std::size_t>(merges));
        comp_count_[s] -= 1 - merges;
    }

    // Components of a side can only merge through a yet-unassigned
    // vertex. A side with two components, one of which sees no
    // unassigned vertex, can never become a tree below this node.
    bool dead_component(int s) {
        if (comp_count_[s] < 2) return false;
        std::size_t n = side_.size();
        alive_.assign(n, false);
        for (std::size_t v = 0; v < n; ++v) {
            if (side_[v] != s) continue;
            for (VertexId u : adj_[v]) {
                if (side_[static_cast<std::size_t>(u)] == kUnassigned) {
                    alive_[static_cast<std::size_t>(dsu_[s].find(static_cast<std::int32_t>(v)))] =
                        true;
                    break;
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (side_[v] != s) continue;
            if (!alive_[static_cast<std::size_t>(dsu_[s].find(static_cast<std::int32_t>(v)))])
                return true;
        }
        return false;
    }

    void visit_leaf() {
        std::vector<bool> in_s(side_.size());
        bool t_empty = true;
        for (std::size_t v = 0; v < side_.size(); ++v) {
            in_s[v] = side_[v] == kSideS;
            if (side_[v] == kSideT) t_empty = false;
        }
        if (t_empty) return;
        if (cfg_.prune) {
            // Acyclicity held throughout; trees additionally need one
            // component per side.
            if (comp_count_[kSideS] != 1 || comp_count_[kSideT] != 1) return;
        } else {
            if (induced_kind(g_, in_s) != SubgraphKind::Tree) return;
            std::vector<bool> in_t = in_s;
            in_t.flip();
            if (induced_kind(g_, in_t) != SubgraphKind::Tree) return;
        }
        found_.push_back(Bipartition::from_membership(std::move(in_s)));
    }

    void trace(std::size_t depth, int s) {
        // Depth plus the side bits of the assignments so far uniquely
        // name a node for small instances.
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < depth; ++i)
            if (side_[static_cast<std::size_t>(order_[i])] == kSideT) mask |= 1ull << i;
        if (s == kSideT) mask |= 1ull << depth;
        stats_.visited.push_back((static_cast<std::uint64_t>(depth + 1) << 48) | mask);
    }

    const PlaneMultigraph& g_;
    SearchConfig cfg_;
    std::vector<VertexId> order_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::int8_t> side_;
    UnionFindUndo dsu_[2];
    std::int32_t comp_count_[2] = {0, 0};
    std::vector<std::int32_t> undo_merges_ = std::vector<std::int32_t>(side_.size(), 0);
    std::vector<bool> alive_;
    std::vector<Bipartition> found_;
    SearchStats stats_;
    bool budget_hit_ = false;
};

} // namespace

SearchOutcome find_tree_partition(const PlaneMultigraph& g, const SearchConfig& cfg) {
    std::vector<VertexId> order = assignment_order(g, cfg.order);

    if (cfg.workers > 1 && !order.empty() && !cfg.trace_nodes) {
        // Split the branch on the first ordered vertex; each worker owns
        // private state and the S branch wins ties, matching the
        // sequential branch order.
        SearchOutcome branch[2];
        std::thread s_thread([&] {
            Searcher searcher(g, cfg, order);
            branch[kSideS] = searcher.run(kSideS);
        });
        Searcher t_searcher(g, cfg, order);
        branch[kSideT] = t_searcher.run(kSideT);
        s_thread.join();

        SearchOutcome merged;
        merged.stats.nodes_expanded =
            branch[0].stats.nodes_expanded + branch[1].stats.nodes_expanded;
        merged.stats.pruned_cycle_s =
            branch[0].stats.pruned_cycle_s + branch[1].stats.pruned_cycle_s;
        merged.stats.pruned_cycle_t =
            branch[0].stats.pruned_cycle_t + branch[1].stats.pruned_cycle_t;
        merged.stats.pruned_dead_s =
            branch[0].stats.pruned_dead_s + branch[1].stats.pruned_dead_s;
        merged.stats.pruned_dead_t =
            branch[0].stats.pruned_dead_t + branch[1].stats.pruned_dead_t;
        merged.all_found = std::move(branch[0].all_found);
        merged.all_found.insert(merged.all_found.end(), branch[1].all_found.begin(),
                                branch[1].all_found.end());
        if (!cfg.enumerate_all && merged.all_found.size() > 1)
            merged.all_found.erase(merged.all_found.begin() + 1, merged.all_found.end());
        if (!merged.all_found.empty()) merged.partition = merged.all_found.front();

        if (!cfg.enumerate_all && branch[0].result == SearchResult::Found) {
            merged.result = SearchResult::Found;
            merged.partition = branch[0].partition;
        } else if (branch[0].result == SearchResult::BudgetExceeded ||
                   branch[1].result == SearchResult::BudgetExceeded) {
            merged.result = SearchResult::BudgetExceeded;
        } else {
            merged.result =
                merged.all_found.empty() ? SearchResult::Exhausted : SearchResult::Found;
        }
        return merged;
    }

    Searcher searcher(g, cfg, std::move(order));
    return searcher.run(std::nullopt);
}

PartitionEnumeration enumerate_tree_partitions(const PlaneMultigraph& g,
                                               std::optional<std::int64_t> limit) {
    const std::int32_t n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("instance too large for exhaustive enumeration");

    PartitionEnumeration out;
    const std::uint64_t masks = (1ull << (n - 1)) - 1;
    for (std::uint64_t mask = 1; mask <= masks; ++mask) {
        std::vector<bool> in_s(static_cast<std::size_t>(n), true);
        for (std::int32_t v = 1; v < n; ++v)
            if (mask & (1ull << (v - 1))) in_s[static_cast<std::size_t>(v)] = false;
        Bipartition p = Bipartition::from_membership(std::move(in_s));
        if (check_condition(g, p, 3)) {
            if (limit && static_cast<std::int64_t>(out.partitions.size()) >= *limit) {
                out.complete = false;
                return out;
            }
            out.partitions.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

struct CycleEnumerator {
    const PlaneMultigraph& dual_graph;
    std::vector<bool> visited;
    std::vector<CertStep> path; // path[i]: (face, edge taken from it)
    std::vector<HamiltonCycleCertificate> found;

    explicit CycleEnumerator(const PlaneMultigraph& d)
        : dual_graph(d), visited(static_cast<std::size_t>(d.vertex_count()), false) {}

    void extend(VertexId at, std::int32_t depth) {
        for (Dart d : dual_graph.darts_at(at)) {
            EdgeId e = edge_of(d);
            VertexId to = dual_graph.vertex_of(twin(d));
            if (to == 0 && depth == dual_graph.vertex_count() - 1) {
                // Closing edge. Each undirected cycle is walked once per
                // direction with first and last edge swapped; keeping
                // first < last keeps exactly one of the two.
                if (path.front().edge >= e) continue;
                path.push_back({at, e});
                found.push_back(HamiltonCycleCertificate::from_steps(path));
                path.pop_back();
            } else if (to != 0 && !visited[static_cast<std::size_t>(to)]) {
                visited[static_cast<std::size_t>(to)] = true;
                path.push_back({at, e});
                extend(to, depth + 1);
                path.pop_back();
                visited[static_cast<std::size_t>(to)] = false;
            }
        }
    }
};

} // namespace

std::vector<HamiltonCycleCertificate> enumerate_dual_hamilton_cycles(const PlaneMultigraph& g) {
    DualPair pair = dual(g);
    CycleEnumerator enumerator(pair.dual);
    enumerator.visited[0] = true;
    enumerator.extend(0, 0);
    std::sort(enumerator.found.begin(), enumerator.found.end(),
              [](const HamiltonCycleCertificate& a, const HamiltonCycleCertificate& b) {
                  return a.steps() < b.steps();
              });
    return enumerator.found;
}

std::optional<EdgeSet> hamilton_via_duality(const PlaneMultigraph& h) {
    DualPair pair = dual(h); // search G = dual(h) for a tree-tree split
    SearchOutcome outcome = find_tree_partition(pair.dual);
    if (outcome.result != SearchResult::Found) return std::nullopt;

    EdgeSet cycle = cross_edges(pair.dual, *outcome.partition);
    if (!is_cycle_edge_set(h, cycle))
        throw std::logic_error("cross edges of a tree-tree partition are not a cycle of h");
    std::vector<bool> touched(static_cast<std::size_t>(h.vertex_count()), false);
    for (EdgeId e : cycle) {
        auto [a, b] = h.endpoints(e);
        touched[static_cast<std::size_t>(a)] = true;
        touched[static_cast<std::size_t>(b)] = true;
    }
    if (std::find(touched.begin(), touched.end(), false) != touched.end())
        throw std::logic_error("duality-derived cycle misses a vertex of h");
    return cycle;
}

bool verify_certificate(const PlaneMultigraph& g, const Bipartition& p,
                        const HamiltonCycleCertificate& cert) {
    try {
        for (int which = 1; which <= 4; ++which)
            if (!check_condition(g, p, which)) return false;
        if (!(partition_to_dual_cycle(g, p) == cert)) return false;
        return dual_cycle_to_partition(g, cert) == p;
    } catch (const std::invalid_argument&) {
        return false;
    } catch (const InvalidCertificate&) {
        return false;
    }
}

} // namespace planedual
