#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccover/graph.hpp"
#include "ccover/interval.hpp"
#include "ccover/poset.hpp"

namespace ccover {

/// Contract of a base-case solver. It is handed vertex sets that are cliques
/// in the current interval supergraph and must return a clique cover of G
/// restricted to that set together with an independent set of it, with
/// |cover| <= declared_phi * |independent| on every call. When declared_phi
/// is absent the engine measures the worst per-call ratio instead and
/// certifies the bound with the measured value.
struct BaseSolver {
    std::optional<double> declared_phi = 1.0;
    std::function<CoverPair(const VertexSet&)> solve;
};

struct SolveStats {
    int max_depth = 0;
    long long base_calls = 0;
    long long split_nodes = 0;
    double observed_phi = 1.0;
};

struct SplitEvent {
    int depth;
    int layer; // 0-based index of the interval layer being split
    const VertexSet& whole;
    const VertexSet& left;
    const VertexSet& separator;
    const VertexSet& right;
};

struct SolveOptions {
    bool check_contracts = true;     // validate every base-solver result against g
    bool validate_supergraph = true; // check E(g) subseteq E(h) before solving
    std::function<void(const SplitEvent&)> on_split; // observation hook for tests
};

/// The solver output: a clique cover and an independent set whose sizes
/// witness the approximation bound without trusting the solver.
struct CoverCertificate {
    CliqueCover cover;
    VertexSet independent;
    std::vector<long long> alphas; // alpha(H_i) of each peeled layer, full vertex set
    int t = 1;                     // total supergraph count including the perfect base
    double phi = 1.0;
    double bound = 0.0;
    SolveStats stats;
};

/// 2^(t-1) * phi * |I| * prod(log2(alpha_i) + 1), with t-1 = alphas.size().
/// An empty instance (independent_size = 0) has bound 0.
double bound_value(const std::vector<long long>& alphas, std::size_t independent_size,
                   double phi);

/// An instance presented as an intersection of supergraphs: interval layers
/// H_1..H_{t-1} plus a perfect base (a poset, or a final interval layer).
/// Holds the induced graph G; when exact_intersection is set, E(G) equals
/// the conjunction of all layer adjacencies.
class IntersectionModel {
public:
    /// Build an exact-intersection model; `induced` must be the conjunction
    /// of the layers (frontends construct it from their native predicate).
    static IntersectionModel exact(std::vector<IntervalSupergraph> layers,
                                   std::optional<Poset> poset_base, AdjacencyGraph induced);

    /// Build a model around an explicitly supplied G. Each layer must be a
    /// supergraph of G; violations raise ModelError naming edge and layer.
    static IntersectionModel with_explicit_graph(std::vector<IntervalSupergraph> layers,
                                                 std::optional<Poset> poset_base,
                                                 AdjacencyGraph g);

    int n() const { return graph_.size(); }
    bool exact_intersection() const { return exact_; }

    /// Interval layers the recursion peels; excludes an interval perfect base.
    int peeled_layer_count() const;
    int t() const { return peeled_layer_count() + 1; }

    const std::vector<IntervalSupergraph>& interval_layers() const { return layers_; }
    const std::optional<Poset>& poset_base() const { return poset_; }
    bool base_is_last_layer() const { return !poset_.has_value(); }
    const AdjacencyGraph& graph() const { return graph_; }

private:
    IntersectionModel() = default;
    std::vector<IntervalSupergraph> layers_;
    std::optional<Poset> poset_;
    AdjacencyGraph graph_;
    bool exact_ = false;

    void validate_shape() const;
};

/// Divide and conquer over one interval supergraph h of g, generic over the
/// base solver. Splits on the canonical ordering until alpha(h[w]) = 1,
/// covers the separator with the base solver, and keeps the larger of the
/// two candidate independent sets (ties go to the combined one).
CoverCertificate solve_theorem1(const AdjacencyGraph& g, const IntervalSupergraph& h,
                                const BaseSolver& base, const SolveOptions& opts = {});

/// One interval layer over a perfect base, exact intersection required;
/// certifies |C| <= 2 |I| (log2 alpha(H_1) + 1).
CoverCertificate solve_cor1(const IntersectionModel& m, const SolveOptions& opts = {});

/// Recursive peeling of interval layers first_layer..t-1 (1-based), the
/// perfect base solving the innermost cliques; certifies
/// |C| <= 2^(t-1) |I| prod(log2 alpha(H_i) + 1).
CoverCertificate solve_cor2(const IntersectionModel& m, int first_layer = 1,
                            const SolveOptions& opts = {});

/// Greedy clique partition + greedy independent set of G restricted to the
/// handed set. No a-priori ratio guarantee (declared_phi unset): the engine
/// reports the measured worst ratio in the certificate.
BaseSolver greedy_graph_base(const AdjacencyGraph& g);

struct VerifyReport {
    bool partition = true;   // parts are disjoint and cover every vertex
    bool cliques = true;     // every part is a clique in g
    bool independent = true; // the independent set is independent in g
    bool bound = true;       // |cover| <= bound (+1e-9 slack)
    bool size_order = true;  // |independent| <= |cover|
    std::vector<std::string> failures;

    bool passed() const { return partition && cliques && independent && bound && size_order; }
};

VerifyReport verify_certificate(const AdjacencyGraph& g, const CoverCertificate& cert);

} // namespace ccover
