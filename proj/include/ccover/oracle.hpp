#pragma once

#include "ccover/graph.hpp"
#include "ccover/interval.hpp"

namespace ccover {

/// Size caps for the exhaustive oracles; inputs above a cap are refused
/// (OracleCapError) instead of running unbounded.
struct OracleLimit {
    int max_alpha_n = 20;
    int max_beta_n = 18;
    int max_phi_n = 14;
};

struct AlphaResult {
    int value = 0;
    VertexSet witness;
};

struct BetaResult {
    int value = 0;
    CliqueCover witness;
};

struct PhiResult {
    long long beta = 1;  // numerator of the attained worst ratio
    long long alpha = 1; // denominator
    double value = 1.0;
    bool all_cliques_checked = false;  // n small enough to scan every clique
    bool max_on_maximal_clique = true; // worst ratio attained on a maximal clique
    VertexSet witness;                 // the clique attaining the ratio
};

/// Maximum independent set by branch and bound.
AlphaResult exact_alpha(const AdjacencyGraph& g, const OracleLimit& limit = {});

/// Minimum clique cover, computed as an exact coloring of the complement.
BetaResult exact_beta(const AdjacencyGraph& g, const OracleLimit& limit = {});

/// Worst ratio beta(G[W]) / alpha(G[W]) over vertex sets W that are cliques
/// in h. Scans every clique when n <= 10, otherwise the maximal cliques of h.
PhiResult exact_phi_small(const AdjacencyGraph& g, const IntervalSupergraph& h,
                          const OracleLimit& limit = {});

} // namespace ccover
