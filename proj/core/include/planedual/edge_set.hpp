#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "planedual/dart.hpp"

namespace planedual {

/// Sorted, duplicate-free set of edge ids of a fixed host graph.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<EdgeId> ids) : ids_(ids) { normalize(); }
    explicit EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) { normalize(); }

    bool contains(EdgeId e) const {
        return std::binary_search(ids_.begin(), ids_.end(), e);
    }
    void insert(EdgeId e) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
        if (it == ids_.end() || *it != e) ids_.insert(it, e);
    }

    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    const std::vector<EdgeId>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const EdgeSet&) const = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<EdgeId> ids_;
};

} // namespace planedual
