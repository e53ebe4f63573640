#include "ccover/graph.hpp"

#include <algorithm>
#include <string>

namespace ccover {

VertexSet::VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    auto dup = std::adjacent_find(ids_.begin(), ids_.end());
    if (dup != ids_.end())
        throw InputError("duplicate vertex id " + std::to_string(*dup) + " in vertex set");
}

VertexSet VertexSet::full(int n) {
    VertexSet s;
    s.ids_.resize(n);
    for (int i = 0; i < n; ++i) s.ids_[i] = i;
    return s;
}

VertexSet VertexSet::single(VertexId v) {
    VertexSet s;
    s.ids_.push_back(v);
    return s;
}

bool VertexSet::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

void VertexSet::validate_for(int n) const {
    if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= n))
        throw InputError("vertex id out of range [0," + std::to_string(n) + ")");
}

VertexSet merge_disjoint(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

AdjacencyGraph::AdjacencyGraph(int n) : n_(n), rows_(n, detail::DynBitset(n)) {
    if (n < 0) throw InputError("negative vertex count");
}

void AdjacencyGraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        throw InputError("vertex id " + std::to_string(v) + " out of range [0," +
                         std::to_string(n_) + ")");
}

void AdjacencyGraph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
}

bool AdjacencyGraph::adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return rows_[u].test(v);
}

std::size_t AdjacencyGraph::edge_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c / 2;
}

bool AdjacencyGraph::is_supergraph_of(const AdjacencyGraph& g) const {
    if (g.size() != n_) return false;
    for (int v = 0; v < n_; ++v)
        if (!g.rows_[v].is_subset_of(rows_[v])) return false;
    return true;
}

VertexId InducedSubgraph::local_of(VertexId original) const {
    auto it = std::lower_bound(to_original.begin(), to_original.end(), original);
    if (it == to_original.end() || *it != original) return -1;
    return static_cast<VertexId>(it - to_original.begin());
}

InducedSubgraph induced_subgraph(const AdjacencyGraph& g, const VertexSet& w) {
    w.validate_for(g.size());
    const int k = static_cast<int>(w.size());
    InducedSubgraph sub{AdjacencyGraph(k), w.ids()};
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.adjacent(w[i], w[j])) sub.graph.add_edge(i, j);
    return sub;
}

namespace {

detail::DynBitset make_mask(int n, const VertexSet& w) {
    detail::DynBitset m(n);
    for (VertexId v : w) m.set(v);
    return m;
}

} // namespace

bool is_clique(const AdjacencyGraph& g, const VertexSet& w) {
    w.validate_for(g.size());
    if (w.size() <= 1) return true;
    auto mask = make_mask(g.size(), w);
    for (VertexId v : w) {
        detail::DynBitset rest = mask;
        rest.reset(v);
        rest.andnot_with(g.row(v));
        if (rest.any()) return false;
    }
    return true;
}

bool is_independent(const AdjacencyGraph& g, const VertexSet& w) {
    w.validate_for(g.size());
    if (w.size() <= 1) return true;
    auto mask = make_mask(g.size(), w);
    for (VertexId v : w)
        if (g.row(v).intersects(mask)) return false;
    return true;
}

bool are_separated(const AdjacencyGraph& g, const VertexSet& a, const VertexSet& b) {
    a.validate_for(g.size());
    b.validate_for(g.size());
    auto mb = make_mask(g.size(), b);
    for (VertexId v : a)
        if (mb.test(v))
            throw InputError("separation query on non-disjoint sets (vertex " +
                             std::to_string(v) + " in both)");
    for (VertexId v : a)
        if (g.row(v).intersects(mb)) return false;
    return true;
}

std::size_t CliqueCover::vertex_count() const {
    std::size_t c = 0;
    for (const auto& p : parts) c += p.size();
    return c;
}

} // namespace ccover
