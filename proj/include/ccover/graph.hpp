#pragma once

#include <cstdint>
#include <vector>

#include "ccover/detail/bits.hpp"
#include "ccover/errors.hpp"

namespace ccover {

using VertexId = std::int32_t;

/// Ordered set of vertex ids, kept sorted ascending with no duplicates.
/// Sets produced from induced views always carry original ids.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<VertexId> ids);

    static VertexSet full(int n);
    static VertexSet single(VertexId v);

    bool contains(VertexId v) const;
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    VertexId operator[](std::size_t i) const { return ids_[i]; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    const std::vector<VertexId>& ids() const { return ids_; }

    // All ids must lie in [0, n); throws InputError otherwise.
    void validate_for(int n) const;

    bool operator==(const VertexSet&) const = default;

private:
    std::vector<VertexId> ids_;
};

/// Merge of two disjoint sorted sets.
VertexSet merge_disjoint(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph with dense symmetric adjacency.
/// Irreflexive; immutable once built (all queries are const).
class AdjacencyGraph {
public:
    AdjacencyGraph() = default;
    explicit AdjacencyGraph(int n);

    int size() const { return n_; }
    void add_edge(VertexId u, VertexId v);
    bool adjacent(VertexId u, VertexId v) const;
    const detail::DynBitset& row(VertexId v) const { return rows_[v]; }
    std::size_t edge_count() const;

    // True iff every edge of g is also an edge of *this (same vertex set).
    bool is_supergraph_of(const AdjacencyGraph& g) const;

    bool operator==(const AdjacencyGraph&) const = default;

private:
    int n_ = 0;
    std::vector<detail::DynBitset> rows_;
    void check_vertex(VertexId v) const;
};

struct InducedSubgraph {
    AdjacencyGraph graph;
    std::vector<VertexId> to_original; // local id -> original id, ascending

    VertexId original_of(VertexId local) const { return to_original[local]; }
    VertexId local_of(VertexId original) const; // -1 if absent
};

InducedSubgraph induced_subgraph(const AdjacencyGraph& g, const VertexSet& w);

bool is_clique(const AdjacencyGraph& g, const VertexSet& w);
bool is_independent(const AdjacencyGraph& g, const VertexSet& w);

// No edge between a and b; a and b must be disjoint.
bool are_separated(const AdjacencyGraph& g, const VertexSet& a, const VertexSet& b);

/// Partition of a vertex set into cliques.
struct CliqueCover {
    std::vector<VertexSet> parts;

    std::size_t vertex_count() const;
    bool operator==(const CliqueCover&) const = default;
};

/// A clique cover together with an independent set of the same graph;
/// the shape every base solver and the recursion itself produce.
struct CoverPair {
    CliqueCover cover;
    VertexSet independent;
};

} // namespace ccover
