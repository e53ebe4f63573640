#include "ccover/cover.hpp"

#include <algorithm>
#include <cmath>

namespace ccover {

double bound_value(const std::vector<long long>& alphas, std::size_t independent_size,
                   double phi) {
    if (independent_size == 0) return 0.0;
    double b = phi * static_cast<double>(independent_size);
    for (long long a : alphas) {
        if (a < 1)
            throw InputError("layer alpha " + std::to_string(a) +
                             " < 1 on a nonempty instance");
        b *= 2.0 * (std::log2(static_cast<double>(a)) + 1.0);
    }
    return b;
}

namespace {

std::string set_preview(const VertexSet& w) {
    std::string s = "{";
    std::size_t shown = std::min<std::size_t>(w.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    if (shown < w.size()) s += ",...";
    return s + "}";
}

// Shared recursion state: the graph certificates are checked against,
// options, and accumulated statistics.
struct EngineCtx {
    const AdjacencyGraph& g;
    const SolveOptions& opts;
    SolveStats stats;
    int call_depth = 0; // depth at the most recent base invocation
};

CoverPair call_base(EngineCtx& ctx, const BaseSolver& base, const VertexSet& w, int depth) {
    ++ctx.stats.base_calls;
    ctx.call_depth = depth;
    CoverPair r = base.solve(w);

    if (!base.declared_phi && !r.independent.empty()) {
        double ratio = static_cast<double>(r.cover.parts.size()) /
                       static_cast<double>(r.independent.size());
        ctx.stats.observed_phi = std::max(ctx.stats.observed_phi, ratio);
    }
    if (!ctx.opts.check_contracts) return r;

    std::vector<VertexId> covered;
    covered.reserve(w.size());
    for (const auto& part : r.cover.parts) {
        if (!is_clique(ctx.g, part))
            throw ContractError("base solver returned a non-clique part on " +
                                set_preview(w));
        covered.insert(covered.end(), part.begin(), part.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != w.ids())
        throw ContractError("base solver cover does not partition " + set_preview(w));
    if (!is_independent(ctx.g, r.independent))
        throw ContractError("base solver returned a dependent set on " + set_preview(w));
    for (VertexId v : r.independent)
        if (!w.contains(v))
            throw ContractError("base solver independent set leaves " + set_preview(w));
    if (!w.empty() && r.independent.empty())
        throw ContractError("base solver returned an empty independent set on " +
                            set_preview(w));
    if (base.declared_phi &&
        static_cast<double>(r.cover.parts.size()) >
            *base.declared_phi * static_cast<double>(r.independent.size()) + 1e-9)
        throw ContractError("base solver exceeded declared ratio on " + set_preview(w));
    return r;
}

// The constructive recursion: split w on the canonical ordering of h until
// alpha(h[w]) = 1, cover the separator clique with the base solver, merge
// covers in (left, separator, right) order, and keep the larger of the two
// independent-set candidates.
CoverPair interval_recursion(EngineCtx& ctx, const IntervalSupergraph& h, int layer,
                             const BaseSolver& base, const VertexSet& w, int depth) {
    if (w.empty()) return {};
    ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);

    SplitSets split = split_sets(h, w);
    if (!split.feasible) return call_base(ctx, base, w, depth);

    ++ctx.stats.split_nodes;
    if (ctx.opts.on_split)
        ctx.opts.on_split({depth, layer, w, split.left, split.separator, split.right});

    CoverPair left = interval_recursion(ctx, h, layer, base, split.left, depth + 1);
    CoverPair sep =
        split.separator.empty() ? CoverPair{} : call_base(ctx, base, split.separator, depth);
    CoverPair right = interval_recursion(ctx, h, layer, base, split.right, depth + 1);

    CoverPair out;
    out.cover.parts.reserve(left.cover.parts.size() + sep.cover.parts.size() +
                            right.cover.parts.size());
    auto append = [&](CliqueCover& c) {
        for (auto& p : c.parts) out.cover.parts.push_back(std::move(p));
    };
    append(left.cover);
    append(sep.cover);
    append(right.cover);

    VertexSet combined = merge_disjoint(left.independent, right.independent);
    out.independent =
        combined.size() >= sep.independent.size() ? std::move(combined)
                                                  : std::move(sep.independent);
    return out;
}

CoverCertificate make_certificate(CoverPair&& pair, std::vector<long long> alphas, double phi,
                                  SolveStats stats) {
    CoverCertificate cert;
    cert.cover = std::move(pair.cover);
    cert.independent = std::move(pair.independent);
    cert.alphas = std::move(alphas);
    cert.t = static_cast<int>(cert.alphas.size()) + 1;
    cert.phi = phi;
    cert.bound = bound_value(cert.alphas, cert.independent.size(), cert.phi);
    cert.stats = stats;
    return cert;
}

} // namespace

CoverCertificate solve_theorem1(const AdjacencyGraph& g, const IntervalSupergraph& h,
                                const BaseSolver& base, const SolveOptions& opts) {
    if (g.size() != h.size())
        throw InputError("graph and interval supergraph have different vertex counts");
    if (!base.solve) throw InputError("base solver has no callable");
    if (opts.validate_supergraph && !h.adjacency().is_supergraph_of(g)) {
        for (int u = 0; u < g.size(); ++u) {
            bool bad = false;
            int witness = -1;
            g.row(u).for_each_set([&](int v) {
                if (!bad && !h.adjacent(u, v)) {
                    bad = true;
                    witness = v;
                }
            });
            if (bad)
                throw InputError("h is not a supergraph of g: edge (" + std::to_string(u) +
                                 "," + std::to_string(witness) + ") missing");
        }
    }

    EngineCtx ctx{g, opts};
    if (g.size() == 0)
        return make_certificate({}, {0}, base.declared_phi.value_or(1.0), ctx.stats);

    long long alpha_full =
        static_cast<long long>(greedy_mis(h, VertexSet::full(h.size())).size());
    CoverPair pair = interval_recursion(ctx, h, 0, base, VertexSet::full(g.size()), 0);
    double phi = base.declared_phi.value_or(std::max(1.0, ctx.stats.observed_phi));
    return make_certificate(std::move(pair), {alpha_full}, phi, ctx.stats);
}

IntersectionModel IntersectionModel::exact(std::vector<IntervalSupergraph> layers,
                                           std::optional<Poset> poset_base,
                                           AdjacencyGraph induced) {
    IntersectionModel m;
    m.layers_ = std::move(layers);
    m.poset_ = std::move(poset_base);
    m.graph_ = std::move(induced);
    m.exact_ = true;
    m.validate_shape();
    return m;
}

IntersectionModel IntersectionModel::with_explicit_graph(std::vector<IntervalSupergraph> layers,
                                                         std::optional<Poset> poset_base,
                                                         AdjacencyGraph g) {
    IntersectionModel m;
    m.layers_ = std::move(layers);
    m.poset_ = std::move(poset_base);
    m.graph_ = std::move(g);
    m.exact_ = false;
    m.validate_shape();
    for (int u = 0; u < m.graph_.size(); ++u) {
        m.graph_.row(u).for_each_set([&](int v) {
            if (v < u) return;
            for (std::size_t k = 0; k < m.layers_.size(); ++k)
                if (!m.layers_[k].adjacent(u, v))
                    throw ModelError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") of G missing from interval layer " +
                                     std::to_string(k + 1));
            if (m.poset_ && (m.poset_->less(u, v) || m.poset_->less(v, u)))
                throw ModelError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") of G missing from the poset base (comparable pair)");
        });
    }
    return m;
}

void IntersectionModel::validate_shape() const {
    const int n = graph_.size();
    for (std::size_t k = 0; k < layers_.size(); ++k)
        if (layers_[k].size() != n)
            throw InputError("interval layer " + std::to_string(k + 1) + " has " +
                             std::to_string(layers_[k].size()) + " vertices, expected " +
                             std::to_string(n));
    if (poset_ && poset_->size() != n)
        throw InputError("poset base has " + std::to_string(poset_->size()) +
                         " elements, expected " + std::to_string(n));
    if (!poset_ && layers_.empty() && n > 0)
        throw InputError("model needs at least one interval layer or a poset base");
}

int IntersectionModel::peeled_layer_count() const {
    if (poset_) return static_cast<int>(layers_.size());
    return std::max(0, static_cast<int>(layers_.size()) - 1);
}

namespace {

CoverPair perfect_base_solve(const IntersectionModel& m, const VertexSet& w) {
    if (m.poset_base()) return mirsky_base_solver(*m.poset_base(), w);
    return pierce_cover(m.interval_layers().back(), w);
}

// Peels layers [k, peeled) of the model; the perfect base handles the
// innermost cliques. declared_phi of each inner solver is the bound its
// suffix certifies, so the contract check stays exact level by level.
struct ModelSolver {
    const IntersectionModel& m;
    EngineCtx& ctx;
    int peeled_from; // 0-based first layer to peel
    std::vector<long long> alphas; // alpha of layers peeled_from..peeled-1, full vertex set

    double suffix_phi(int j) const {
        double phi = 1.0;
        for (int i = j; i < peeled_from + static_cast<int>(alphas.size()); ++i) {
            long long a = alphas[i - peeled_from];
            phi *= 2.0 * (std::log2(static_cast<double>(std::max<long long>(a, 1))) + 1.0);
        }
        return phi;
    }

    CoverPair solve_from(int j, const VertexSet& w) {
        const int peeled_end = peeled_from + static_cast<int>(alphas.size());
        if (j == peeled_end) return perfect_base_solve(m, w);
        BaseSolver inner{suffix_phi(j + 1),
                         [this, j](const VertexSet& w2) { return solve_from(j + 1, w2); }};
        return interval_recursion(ctx, m.interval_layers()[j], j, inner, w, ctx.call_depth);
    }
};

CoverCertificate solve_model(const IntersectionModel& m, int peeled_from,
                             const SolveOptions& opts) {
    EngineCtx ctx{m.graph(), opts};
    const int peeled = m.peeled_layer_count();

    std::vector<long long> alphas;
    if (m.n() == 0) {
        alphas.assign(peeled - peeled_from, 0);
        return make_certificate({}, std::move(alphas), 1.0, ctx.stats);
    }
    const VertexSet all = VertexSet::full(m.n());
    for (int k = peeled_from; k < peeled; ++k)
        alphas.push_back(
            static_cast<long long>(greedy_mis(m.interval_layers()[k], all).size()));

    ModelSolver solver{m, ctx, peeled_from, alphas};
    CoverPair pair;
    if (peeled_from == peeled) {
        // Degenerate t = 1: no layer to peel, the base solves everything.
        ++ctx.stats.base_calls;
        pair = perfect_base_solve(m, all);
    } else {
        pair = solver.solve_from(peeled_from, all);
    }
    return make_certificate(std::move(pair), std::move(alphas), 1.0, ctx.stats);
}

} // namespace

CoverCertificate solve_cor1(const IntersectionModel& m, const SolveOptions& opts) {
    if (!m.exact_intersection())
        throw ModelError("exact intersection required: with an explicit G the identity "
                         "G[W] = base[W] on layer cliques fails");
    if (m.t() > 2)
        throw InputError("model has " + std::to_string(m.t()) +
                         " supergraphs; use the layer-peeling solver");
    return solve_model(m, 0, opts);
}

CoverCertificate solve_cor2(const IntersectionModel& m, int first_layer,
                            const SolveOptions& opts) {
    if (!m.exact_intersection())
        throw ModelError("exact intersection required: with an explicit G the identity "
                         "G[W] = base[W] on layer cliques fails");
    if (first_layer < 1 || first_layer > m.peeled_layer_count() + 1)
        throw InputError("first layer index " + std::to_string(first_layer) +
                         " out of range");
    return solve_model(m, first_layer - 1, opts);
}

BaseSolver greedy_graph_base(const AdjacencyGraph& g) {
    BaseSolver base;
    base.declared_phi = std::nullopt;
    base.solve = [&g](const VertexSet& w) -> CoverPair {
        CoverPair out;
        const int n = g.size();
        detail::DynBitset uncovered(n);
        for (VertexId v : w) uncovered.set(v);

        for (VertexId u : w) {
            if (!uncovered.test(u)) continue;
            std::vector<VertexId> part{u};
            detail::DynBitset common = g.row(u); // vertices adjacent to all members
            uncovered.reset(u);
            detail::DynBitset cand = common;
            cand.and_with(uncovered);
            cand.for_each_set([&](int v) {
                if (!uncovered.test(v) || !common.test(v)) return;
                part.push_back(v);
                uncovered.reset(v);
                common.and_with(g.row(v));
            });
            out.cover.parts.emplace_back(std::move(part));
        }

        std::vector<VertexId> indep;
        detail::DynBitset blocked(n);
        for (VertexId v : w) {
            if (blocked.test(v)) continue;
            indep.push_back(v);
            blocked.or_with(g.row(v));
        }
        out.independent = VertexSet(std::move(indep));
        return out;
    };
    return base;
}

VerifyReport verify_certificate(const AdjacencyGraph& g, const CoverCertificate& cert) {
    VerifyReport report;
    const int n = g.size();

    std::vector<int> seen(n, 0);
    for (std::size_t pi = 0; pi < cert.cover.parts.size(); ++pi) {
        const VertexSet& part = cert.cover.parts[pi];
        part.validate_for(n);
        for (VertexId v : part) ++seen[v];
        if (part.size() > 1) {
            detail::DynBitset mask(n);
            for (VertexId v : part) mask.set(v);
            for (VertexId v : part) {
                detail::DynBitset rest = mask;
                rest.reset(v);
                rest.andnot_with(g.row(v));
                if (rest.any()) {
                    int other = -1;
                    rest.for_each_set([&](int u) {
                        if (other < 0) other = u;
                    });
                    report.cliques = false;
                    report.failures.push_back("part " + std::to_string(pi) +
                                              " is not a clique: (" + std::to_string(v) +
                                              "," + std::to_string(other) + ") not an edge");
                    break;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (seen[v] == 0) {
            report.partition = false;
            report.failures.push_back("vertex " + std::to_string(v) + " is not covered");
        } else if (seen[v] > 1) {
            report.partition = false;
            report.failures.push_back("vertex " + std::to_string(v) + " is covered " +
                                      std::to_string(seen[v]) + " times");
        }
    }

    cert.independent.validate_for(n);
    if (!is_independent(g, cert.independent)) {
        report.independent = false;
        report.failures.push_back("certificate independent set has an internal edge");
    }

    if (static_cast<double>(cert.cover.parts.size()) > cert.bound + 1e-9) {
        report.bound = false;
        report.failures.push_back("cover size " + std::to_string(cert.cover.parts.size()) +
                                  " exceeds bound " + std::to_string(cert.bound));
    }
    if (cert.independent.size() > cert.cover.parts.size()) {
        report.size_order = false;
        report.failures.push_back("independent set larger than the cover");
    }
    return report;
}

} // namespace ccover
