#pragma once

#include <utility>
#include <vector>

#include "ccover/graph.hpp"

namespace ccover {

/// Strict partial order on elements 0..n-1, held transitively closed.
/// Serves as the perfect base layer with incomparability-graph semantics:
/// antichains are cliques there, chains are independent sets.
class Poset {
public:
    Poset() = default;

    /// Transitive closure of the given relation edges (u < v per pair).
    /// Throws InputError naming a witness if the relation has a cycle.
    static Poset close_transitively(int n,
                                    const std::vector<std::pair<VertexId, VertexId>>& edges);

    /// Wrap successor rows that are already transitively closed
    /// (e.g. strict containment, which is closed by construction).
    static Poset from_transitive_relation(int n, std::vector<detail::DynBitset> successors);

    int size() const { return n_; }
    bool less(VertexId u, VertexId v) const { return succ_[u].test(v); }
    const detail::DynBitset& successors(VertexId v) const { return succ_[v]; }
    const detail::DynBitset& predecessors(VertexId v) const { return pred_[v]; }

    /// Edge (u,v) iff neither u < v nor v < u.
    AdjacencyGraph incomparability_adjacency() const;

private:
    int n_ = 0;
    std::vector<detail::DynBitset> succ_;
    std::vector<detail::DynBitset> pred_;

    void build_predecessors();
};

/// Antichain partition by longest-chain height plus one longest chain,
/// restricted to w. Every antichain is a clique in the incomparability
/// graph and the chain is independent there; |cover| = |chain| exactly
/// (the cover is the certificate of its own optimality).
/// The chain returned is the lexicographically least maximum chain.
CoverPair mirsky_base_solver(const Poset& p, const VertexSet& w);

} // namespace ccover
