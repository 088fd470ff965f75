#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace planedual {

// Disjoint sets with union by size and an undo log. No path compression,
// so every union can be rolled back exactly; find walks at most O(log n)
// parents.
class UnionFindUndo {
public:
    explicit UnionFindUndo(std::int32_t n)
        : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::int32_t find(std::int32_t x) const {
        while (parent_[static_cast<std::size_t>(x)] != x)
            x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    bool connected(std::int32_t a, std::int32_t b) const { return find(a) == find(b); }

    // False when a and b were already in the same set (nothing logged).
    bool unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)])
            std::swap(a, b);
        log_.push_back(b);
        parent_[static_cast<std::size_t>(b)] = a;
        size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
        return true;
    }

    std::size_t checkpoint() const { return log_.size(); }

    void rollback(std::size_t mark) {
        while (log_.size() > mark) {
            std::int32_t b = log_.back();
            log_.pop_back();
            std::int32_t a = parent_[static_cast<std::size_t>(b)];
            parent_[static_cast<std::size_t>(b)] = b;
            size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
        }
    }

private:
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> size_;
    std::vector<std::int32_t> log_;
};

} // namespace planedual
