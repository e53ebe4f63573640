#include "ccover/interval.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <tuple>

namespace ccover {

std::vector<VertexId> canonical_order(const std::vector<Interval>& intervals) {
    const int n = static_cast<int>(intervals.size());
    for (int i = 0; i < n; ++i)
        if (intervals[i].lo > intervals[i].hi)
            throw InputError("interval " + std::to_string(i) + " has lo > hi");
    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return std::tie(intervals[a].lo, intervals[a].hi, a) <
               std::tie(intervals[b].lo, intervals[b].hi, b);
    });
    return order;
}

IntervalSupergraph::IntervalSupergraph(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
    order_ = canonical_order(intervals_);
    position_.resize(intervals_.size());
    for (int k = 0; k < static_cast<int>(order_.size()); ++k) position_[order_[k]] = k;
}

AdjacencyGraph IntervalSupergraph::adjacency() const {
    const int n = size();
    AdjacencyGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersects(intervals_[i], intervals_[j])) g.add_edge(i, j);
    return g;
}

VertexSet left_neighborhood(const IntervalSupergraph& h, int pos) {
    if (pos < 0 || pos >= h.size())
        throw InputError("canonical position " + std::to_string(pos) + " out of range");
    const Interval& cur = h.interval(h.order()[pos]);
    std::vector<VertexId> out;
    for (int k = 0; k < pos; ++k) {
        VertexId u = h.order()[k];
        if (intersects(h.interval(u), cur)) out.push_back(u);
    }
    return VertexSet(std::move(out));
}

namespace {

// Candidates sorted by (hi, id): the scan order of both greedy routines.
std::vector<VertexId> by_right_endpoint(const IntervalSupergraph& h, const VertexSet& w) {
    std::vector<VertexId> c(w.begin(), w.end());
    std::sort(c.begin(), c.end(), [&](VertexId a, VertexId b) {
        return std::tie(h.interval(a).hi, a) < std::tie(h.interval(b).hi, b);
    });
    return c;
}

} // namespace

VertexSet greedy_mis(const IntervalSupergraph& h, const VertexSet& w) {
    w.validate_for(h.size());
    auto cand = by_right_endpoint(h, w);
    std::vector<VertexId> chosen;
    std::int64_t last_hi = 0;
    for (VertexId v : cand) {
        if (chosen.empty() || h.interval(v).lo > last_hi) {
            chosen.push_back(v);
            last_hi = h.interval(v).hi;
        }
    }
    return VertexSet(std::move(chosen));
}

CoverPair pierce_cover(const IntervalSupergraph& h, const VertexSet& w) {
    w.validate_for(h.size());
    auto cand = by_right_endpoint(h, w);
    std::vector<char> covered(cand.size(), 0);
    CoverPair result;
    std::vector<VertexId> chosen;
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (covered[i]) continue;
        const std::int64_t pierce = h.interval(cand[i]).hi;
        std::vector<VertexId> part;
        for (std::size_t j = i; j < cand.size(); ++j) {
            if (!covered[j] && h.interval(cand[j]).lo <= pierce) {
                part.push_back(cand[j]);
                covered[j] = 1;
            }
        }
        chosen.push_back(cand[i]);
        result.cover.parts.emplace_back(std::move(part));
    }
    result.independent = VertexSet(std::move(chosen));
    return result;
}

SplitSets split_sets(const IntervalSupergraph& h, const VertexSet& w) {
    VertexSet mis = greedy_mis(h, w);
    if (mis.size() < 2) return {};

    // Independent-set vertices in canonical order; the pivot is the element
    // right after the floor(alpha/2)-th one (1-based, as the halving needs).
    std::vector<VertexId> mis_by_pos(mis.begin(), mis.end());
    std::sort(mis_by_pos.begin(), mis_by_pos.end(),
              [&](VertexId a, VertexId b) { return h.position(a) < h.position(b); });
    const VertexId pivot = mis_by_pos[mis.size() / 2];
    const int pivot_pos = h.position(pivot);
    const Interval& pivot_iv = h.interval(pivot);

    std::vector<VertexId> left, sep, right;
    for (VertexId u : w) {
        if (h.position(u) >= pivot_pos) {
            right.push_back(u);
        } else if (intersects(h.interval(u), pivot_iv)) {
            sep.push_back(u);
        } else {
            left.push_back(u);
        }
    }
    return {true, VertexSet(std::move(left)), VertexSet(std::move(sep)),
            VertexSet(std::move(right))};
}

} // namespace ccover
