#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ccover/graph.hpp"
#include "ccover/interval.hpp"
#include "ccover/poset.hpp"

// Test-side helpers. The brute-force routines below enumerate subsets
// directly and stay independent of the library's branch-and-bound oracle,
// so the two can check each other.
namespace testutil {

inline ccover::AdjacencyGraph path_graph(int n) {
    ccover::AdjacencyGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline ccover::AdjacencyGraph cycle_graph(int n) {
    ccover::AdjacencyGraph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

inline ccover::AdjacencyGraph complete_graph(int n) {
    ccover::AdjacencyGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline ccover::VertexSet set_of(std::initializer_list<ccover::VertexId> ids) {
    return ccover::VertexSet(std::vector<ccover::VertexId>(ids));
}

inline bool mask_independent(const ccover::AdjacencyGraph& g, unsigned mask) {
    for (int u = 0; u < g.size(); ++u) {
        if (!(mask >> u & 1)) continue;
        for (int v = u + 1; v < g.size(); ++v)
            if ((mask >> v & 1) && g.adjacent(u, v)) return false;
    }
    return true;
}

inline bool mask_clique(const ccover::AdjacencyGraph& g, unsigned mask) {
    for (int u = 0; u < g.size(); ++u) {
        if (!(mask >> u & 1)) continue;
        for (int v = u + 1; v < g.size(); ++v)
            if ((mask >> v & 1) && !g.adjacent(u, v)) return false;
    }
    return true;
}

// Maximum independent set by scanning all subsets; n <= ~16.
inline int brute_alpha(const ccover::AdjacencyGraph& g) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.size()); ++mask)
        if (mask_independent(g, mask)) best = std::max(best, __builtin_popcount(mask));
    return best;
}

// Minimum clique partition by recursive enumeration; n <= ~10.
inline int brute_beta_rec(const ccover::AdjacencyGraph& g, unsigned remaining, int used,
                          int& best) {
    if (used >= best) return best;
    if (!remaining) return best = used;
    int v = __builtin_ctz(remaining);
    // enumerate cliques within `remaining` that contain v
    std::vector<unsigned> cliques;
    unsigned others = remaining & ~(1u << v);
    for (unsigned sub = others;; sub = (sub - 1) & others) {
        unsigned cand = sub | (1u << v);
        if (mask_clique(g, cand)) cliques.push_back(cand);
        if (sub == 0) break;
    }
    for (unsigned c : cliques) brute_beta_rec(g, remaining & ~c, used + 1, best);
    return best;
}

inline int brute_beta(const ccover::AdjacencyGraph& g) {
    if (g.size() == 0) return 0;
    int best = g.size();
    brute_beta_rec(g, (1u << g.size()) - 1, 0, best);
    return best;
}

// Maximum independent set restricted to a subset of an interval supergraph.
inline int brute_interval_alpha(const ccover::IntervalSupergraph& h,
                                const ccover::VertexSet& w) {
    int best = 0;
    const auto& ids = w.ids();
    for (unsigned mask = 0; mask < (1u << ids.size()); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < ids.size(); ++i) {
            if (!(mask >> i & 1)) continue;
            for (std::size_t j = i + 1; ok && j < ids.size(); ++j)
                if ((mask >> j & 1) && h.adjacent(ids[i], ids[j])) ok = false;
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

inline std::vector<ccover::Interval> random_intervals(std::mt19937_64& rng, int n,
                                                      std::int64_t coord_max) {
    std::vector<ccover::Interval> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::int64_t lo = static_cast<std::int64_t>(rng() % (coord_max + 1));
        std::int64_t len = static_cast<std::int64_t>(rng() % (coord_max / 4 + 2));
        out.push_back({lo, std::min(coord_max, lo + len)});
    }
    return out;
}

inline ccover::AdjacencyGraph random_graph(std::mt19937_64& rng, int n, double p) {
    ccover::AdjacencyGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p) g.add_edge(i, j);
    return g;
}

// Random DAG edges on 0..n-1 (u < v only), then transitively closed.
inline ccover::Poset random_poset(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<ccover::VertexId, ccover::VertexId>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < p) edges.emplace_back(i, j);
    return ccover::Poset::close_transitively(n, edges);
}

} // namespace testutil
