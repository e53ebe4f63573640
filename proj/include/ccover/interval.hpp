#pragma once

#include <cstdint>
#include <vector>

#include "ccover/graph.hpp"

namespace ccover {

/// Closed interval with integer endpoints: [a,b] and [c,d] intersect
/// iff max(a,c) <= min(b,d); touching endpoints count.
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = 0;

    bool contains(std::int64_t x) const { return lo <= x && x <= hi; }
    bool operator==(const Interval&) const = default;
};

inline bool intersects(const Interval& a, const Interval& b) {
    return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi);
}

/// Permutation sorting intervals by (lo, hi, id) ascending.
/// Result maps position -> vertex id. Throws InputError if some lo > hi.
std::vector<VertexId> canonical_order(const std::vector<Interval>& intervals);

/// An interval supergraph: the interval representation of one layer H
/// together with its canonical ordering. Immutable after construction.
class IntervalSupergraph {
public:
    IntervalSupergraph() = default;
    explicit IntervalSupergraph(std::vector<Interval> intervals);

    int size() const { return static_cast<int>(intervals_.size()); }
    const Interval& interval(VertexId v) const { return intervals_[v]; }
    const std::vector<Interval>& intervals() const { return intervals_; }

    /// Canonical ordering: order()[k] is the vertex at position k.
    const std::vector<VertexId>& order() const { return order_; }
    int position(VertexId v) const { return position_[v]; }

    bool adjacent(VertexId u, VertexId v) const {
        return u != v && intersects(intervals_[u], intervals_[v]);
    }

    /// Dense adjacency of the interval intersection graph (O(n^2) build).
    AdjacencyGraph adjacency() const;

private:
    std::vector<Interval> intervals_;
    std::vector<VertexId> order_;
    std::vector<int> position_;
};

/// Vertices at canonical positions < pos whose intervals intersect the
/// interval at pos. Every returned interval contains that interval's lo
/// coordinate, so the set is a clique in the supergraph.
VertexSet left_neighborhood(const IntervalSupergraph& h, int pos);

/// Maximum independent set of h restricted to w, by the exact greedy rule:
/// repeatedly take the interval with smallest hi, discard intersecting ones.
VertexSet greedy_mis(const IntervalSupergraph& h, const VertexSet& w);

/// Greedy Helly piercing of h restricted to w: pierce at the smallest
/// remaining hi; each part is the set of remaining intervals containing the
/// pierce point. |cover| = |independent| = alpha(h[w]) exactly.
CoverPair pierce_cover(const IntervalSupergraph& h, const VertexSet& w);

/// Three-way split used by the divide-and-conquer recursion.
/// Infeasible when alpha(h[w]) < 2 (base-case trigger, not an error).
/// When feasible: left, separator, right partition w; separator is the
/// left-neighborhood (within w) of the pivot vertex, hence a clique in h;
/// left and right are separated in h and in every subgraph of h.
struct SplitSets {
    bool feasible = false;
    VertexSet left;
    VertexSet separator;
    VertexSet right;
};

SplitSets split_sets(const IntervalSupergraph& h, const VertexSet& w);

} // namespace ccover
