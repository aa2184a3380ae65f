#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>

#include "simlearn/core/element.hpp"
#include "simlearn/core/errors.hpp"

namespace simlearn {

/// Cache and cost meter for cross-group similarity queries. A pair is billed
/// once regardless of argument order or how often it is re-asked; count() is
/// the number of distinct unordered pairs answered so far.
class QueryLedger {
public:
    /// Cached value for (x, y), computing it via `compute(x, y)` on a miss.
    /// x and y must come from different groups.
    template <typename F>
    double fetch_or_compute(const Element& x, const Element& y, F&& compute) {
        const std::uint64_t key = pair_key(x, y);
        auto it = answered_.find(key);
        if (it != answered_.end()) return it->second;
        const double value = compute(x, y);
        answered_.emplace(key, value);
        return value;
    }

    std::int64_t count() const { return static_cast<std::int64_t>(answered_.size()); }

    void reset() { answered_.clear(); }

    /// Canonical key for an unordered cross-group pair: the lower-group
    /// element goes first, so (x, y) and (y, x) collide.
    static std::uint64_t pair_key(const Element& x, const Element& y) {
        if (x.group == y.group)
            throw UsageError("QueryLedger: pair must span two groups");
        const Element* lo = &x;
        const Element* hi = &y;
        if (hi->group < lo->group) std::swap(lo, hi);
        return (pack_side(*lo) << 32) | pack_side(*hi);
    }

private:
    static std::uint64_t pack_side(const Element& e) {
        if (e.group < 0 || e.group >= (1 << 6))
            throw UsageError("QueryLedger: group id out of range");
        if (e.index < 0 || e.index >= (std::int64_t{1} << 26))
            throw UsageError("QueryLedger: element index out of range");
        return (static_cast<std::uint64_t>(e.group) << 26) |
               static_cast<std::uint64_t>(e.index);
    }

    std::unordered_map<std::uint64_t, double> answered_;
};

}  // namespace simlearn
