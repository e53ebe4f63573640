#include "ccover/poset.hpp"

#include <algorithm>
#include <string>

namespace ccover {

namespace {

void check_element(VertexId v, int n) {
    if (v < 0 || v >= n)
        throw InputError("poset element " + std::to_string(v) + " out of range [0," +
                         std::to_string(n) + ")");
}

[[noreturn]] void throw_cycle(const std::vector<std::vector<VertexId>>& pred_in_left,
                              const std::vector<char>& leftover, VertexId start) {
    // Every leftover vertex has a leftover predecessor; walking backwards
    // must revisit a vertex, and the revisit closes a cycle.
    std::vector<VertexId> path;
    std::vector<int> pos_on_path(leftover.size(), -1);
    VertexId cur = start;
    while (pos_on_path[cur] < 0) {
        pos_on_path[cur] = static_cast<int>(path.size());
        path.push_back(cur);
        cur = pred_in_left[cur].front();
    }
    std::string msg = "poset relation has a cycle: ";
    msg += std::to_string(cur);
    for (int i = static_cast<int>(path.size()) - 1; i >= pos_on_path[cur]; --i)
        msg += " < " + std::to_string(path[i]);
    throw InputError(msg);
}

} // namespace

Poset Poset::close_transitively(int n,
                                const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<std::vector<VertexId>> succ_list(n);
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : edges) {
        check_element(u, n);
        check_element(v, n);
        if (u == v) throw InputError("poset relation has a cycle: " + std::to_string(u) +
                                     " < " + std::to_string(u));
        succ_list[u].push_back(v);
        ++indeg[v];
    }

    // Kahn topological sort; leftovers witness a cycle.
    std::vector<VertexId> topo;
    topo.reserve(n);
    std::vector<int> remaining = indeg;
    std::vector<VertexId> queue;
    for (int v = 0; v < n; ++v)
        if (remaining[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        topo.push_back(v);
        for (VertexId s : succ_list[v])
            if (--remaining[s] == 0) queue.push_back(s);
    }
    if (static_cast<int>(topo.size()) < n) {
        std::vector<char> leftover(n, 0);
        for (int v = 0; v < n; ++v) leftover[v] = remaining[v] > 0;
        std::vector<std::vector<VertexId>> pred_in_left(n);
        VertexId start = -1;
        for (int u = 0; u < n; ++u) {
            if (!leftover[u]) continue;
            if (start < 0) start = u;
            for (VertexId s : succ_list[u])
                if (leftover[s]) pred_in_left[s].push_back(u);
        }
        throw_cycle(pred_in_left, leftover, start);
    }

    Poset p;
    p.n_ = n;
    p.succ_.assign(n, detail::DynBitset(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        VertexId v = *it;
        for (VertexId s : succ_list[v]) {
            p.succ_[v].set(s);
            p.succ_[v].or_with(p.succ_[s]);
        }
    }
    p.build_predecessors();
    return p;
}

Poset Poset::from_transitive_relation(int n, std::vector<detail::DynBitset> successors) {
    Poset p;
    p.n_ = n;
    p.succ_ = std::move(successors);
    for (int v = 0; v < n; ++v)
        if (p.succ_[v].test(v))
            throw InputError("poset relation has a cycle: " + std::to_string(v) + " < " +
                             std::to_string(v));
    p.build_predecessors();
    return p;
}

void Poset::build_predecessors() {
    pred_.assign(n_, detail::DynBitset(n_));
    for (int u = 0; u < n_; ++u)
        succ_[u].for_each_set([&](int v) { pred_[v].set(u); });
}

AdjacencyGraph Poset::incomparability_adjacency() const {
    AdjacencyGraph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!succ_[u].test(v) && !succ_[v].test(u)) g.add_edge(u, v);
    return g;
}

CoverPair mirsky_base_solver(const Poset& p, const VertexSet& w) {
    w.validate_for(p.size());
    if (w.empty()) return {};
    const int n = p.size();

    detail::DynBitset w_mask(n);
    for (VertexId v : w) w_mask.set(v);

    // Process w in a topological order: in a closed relation, predecessor
    // counts strictly increase along the order.
    std::vector<VertexId> topo(w.begin(), w.end());
    std::vector<int> pred_count(n, 0);
    for (VertexId v : w) {
        detail::DynBitset m = p.predecessors(v);
        m.and_with(w_mask);
        pred_count[v] = m.count();
    }
    std::sort(topo.begin(), topo.end(), [&](VertexId a, VertexId b) {
        return std::tie(pred_count[a], a) < std::tie(pred_count[b], b);
    });

    // height: longest chain within w ending at the element;
    // up: longest chain within w starting at it.
    std::vector<int> height(n, 0), up(n, 0);
    for (VertexId v : topo) {
        int best = 0;
        detail::DynBitset m = p.predecessors(v);
        m.and_with(w_mask);
        m.for_each_set([&](int u) { best = std::max(best, height[u]); });
        height[v] = best + 1;
    }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        VertexId v = *it;
        int best = 0;
        detail::DynBitset m = p.successors(v);
        m.and_with(w_mask);
        m.for_each_set([&](int u) { best = std::max(best, up[u]); });
        up[v] = best + 1;
    }

    int longest = 0;
    for (VertexId v : w) longest = std::max(longest, height[v]);

    CoverPair result;
    result.cover.parts.resize(longest);
    {
        std::vector<std::vector<VertexId>> levels(longest);
        for (VertexId v : w) levels[height[v] - 1].push_back(v); // w ascending -> sorted
        for (int l = 0; l < longest; ++l)
            result.cover.parts[l] = VertexSet(std::move(levels[l]));
    }

    // Lexicographically least maximum chain: at each step take the smallest
    // element that still heads a chain of the required remaining length.
    std::vector<VertexId> chain;
    VertexId cur = -1;
    for (int need = longest; need >= 1; --need) {
        VertexId pick = -1;
        if (cur < 0) {
            for (VertexId v : w)
                if (up[v] == need) {
                    pick = v;
                    break;
                }
        } else {
            detail::DynBitset m = p.successors(cur);
            m.and_with(w_mask);
            int found = -1;
            m.for_each_set([&](int v) {
                if (found < 0 && up[v] == need) found = v;
            });
            pick = found;
        }
        chain.push_back(pick);
        cur = pick;
    }
    result.independent = VertexSet(std::move(chain));
    return result;
}

} // namespace ccover
