#include "ccover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <tuple>

namespace ccover {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const AdjacencyGraph& g) {
    std::vector<Mask> adj(g.size(), 0);
    for (int u = 0; u < g.size(); ++u)
        g.row(u).for_each_set([&](int v) { adj[u] |= Mask{1} << v; });
    return adj;
}

void check_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw OracleCapError(std::string("exact ") + what + " refused: " + std::to_string(n) +
                             " vertices exceeds cap " + std::to_string(cap));
}

struct AlphaSearch {
    const std::vector<Mask>& adj;
    int best = 0;
    Mask best_set = 0;

    // Branch on the highest-degree candidate, include-branch first.
    void expand(Mask cand, Mask chosen, int size) {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
            best = size;
            best_set = chosen;
            return;
        }
        int pick = -1, pick_deg = -1;
        for (Mask m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int d = std::popcount(adj[v] & cand);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        const Mask bit = Mask{1} << pick;
        expand(cand & ~(adj[pick] | bit), chosen | bit, size + 1);
        expand(cand & ~bit, chosen, size);
    }
};

int alpha_masked(const std::vector<Mask>& adj, Mask cand, Mask* witness = nullptr) {
    AlphaSearch s{adj};
    s.expand(cand, 0, 0);
    if (witness) *witness = s.best_set;
    return s.best;
}

struct BetaSearch {
    const std::vector<Mask>& adj; // adjacency of g; classes must be cliques in g
    std::vector<VertexId> order;
    int lower = 1;
    int best;
    std::vector<Mask> classes;
    std::vector<Mask> best_classes;

    void assign(std::size_t idx, int used) {
        if (used >= best) return;
        if (idx == order.size()) {
            best = used;
            best_classes.assign(classes.begin(), classes.begin() + used);
            return;
        }
        const VertexId v = order[idx];
        const Mask bit = Mask{1} << v;
        for (int c = 0; c < used && best > lower; ++c) {
            if ((classes[c] & ~adj[v]) == 0) {
                classes[c] |= bit;
                assign(idx + 1, used);
                classes[c] &= ~bit;
            }
        }
        if (used + 1 < best && best > lower) {
            classes[used] = bit;
            assign(idx + 1, used + 1);
            classes[used] = 0;
        }
    }
};

int beta_masked(const std::vector<Mask>& adj, Mask cand, std::vector<Mask>* witness = nullptr) {
    std::vector<VertexId> verts;
    for (Mask m = cand; m; m &= m - 1) verts.push_back(std::countr_zero(m));
    if (verts.empty()) {
        if (witness) witness->clear();
        return 0;
    }

    // Restrict adjacency to the candidate set.
    std::vector<Mask> sub(adj.size(), 0);
    for (VertexId v : verts) sub[v] = adj[v] & cand;

    // Greedy first-fit on (complement-degree desc, id) gives the initial
    // incumbent; alpha of the candidate set is the matching lower bound.
    BetaSearch s{sub};
    s.order = verts;
    const int k = static_cast<int>(verts.size());
    std::sort(s.order.begin(), s.order.end(), [&](VertexId a, VertexId b) {
        int da = k - 1 - std::popcount(sub[a]);
        int db = k - 1 - std::popcount(sub[b]);
        return std::tie(db, a) < std::tie(da, b); // desc degree, asc id
    });
    std::vector<Mask> greedy;
    for (VertexId v : s.order) {
        bool placed = false;
        for (auto& cls : greedy) {
            if ((cls & ~sub[v]) == 0) {
                cls |= Mask{1} << v;
                placed = true;
                break;
            }
        }
        if (!placed) greedy.push_back(Mask{1} << v);
    }
    s.best = static_cast<int>(greedy.size());
    s.best_classes = greedy;
    s.lower = alpha_masked(sub, cand);
    if (s.best > s.lower) {
        s.classes.assign(verts.size(), 0);
        s.assign(0, 0);
    }
    if (witness) *witness = s.best_classes;
    return s.best;
}

VertexSet mask_to_set(Mask m) {
    std::vector<VertexId> ids;
    for (; m; m &= m - 1) ids.push_back(std::countr_zero(m));
    return VertexSet(std::move(ids));
}

struct CliqueEnumerator {
    const std::vector<Mask>& adj;
    std::vector<Mask> found;

    void bron_kerbosch(Mask r, Mask p, Mask x) {
        if (p == 0 && x == 0) {
            found.push_back(r);
            return;
        }
        int pivot = -1, pivot_cnt = -1;
        for (Mask m = p | x; m; m &= m - 1) {
            int u = std::countr_zero(m);
            int c = std::popcount(p & adj[u]);
            if (c > pivot_cnt) {
                pivot_cnt = c;
                pivot = u;
            }
        }
        for (Mask m = p & ~adj[pivot]; m; m &= m - 1) {
            int v = std::countr_zero(m);
            const Mask bit = Mask{1} << v;
            bron_kerbosch(r | bit, p & adj[v], x & adj[v]);
            p &= ~bit;
            x |= bit;
        }
    }
};

} // namespace

AlphaResult exact_alpha(const AdjacencyGraph& g, const OracleLimit& limit) {
    check_cap(g.size(), limit.max_alpha_n, "alpha");
    if (g.size() == 0) return {};
    auto adj = adjacency_masks(g);
    Mask all = g.size() == 64 ? ~Mask{0} : (Mask{1} << g.size()) - 1;
    Mask witness = 0;
    int value = alpha_masked(adj, all, &witness);
    return {value, mask_to_set(witness)};
}

BetaResult exact_beta(const AdjacencyGraph& g, const OracleLimit& limit) {
    check_cap(g.size(), limit.max_beta_n, "beta");
    if (g.size() == 0) return {};
    auto adj = adjacency_masks(g);
    Mask all = (Mask{1} << g.size()) - 1;
    std::vector<Mask> classes;
    int value = beta_masked(adj, all, &classes);
    BetaResult r{value, {}};
    for (Mask c : classes) r.witness.parts.push_back(mask_to_set(c));
    std::sort(r.witness.parts.begin(), r.witness.parts.end(),
              [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
    return r;
}

PhiResult exact_phi_small(const AdjacencyGraph& g, const IntervalSupergraph& h,
                          const OracleLimit& limit) {
    if (g.size() != h.size())
        throw InputError("graph and interval supergraph sizes differ");
    check_cap(g.size(), limit.max_phi_n, "phi");
    const int n = g.size();
    PhiResult result;
    if (n == 0) return result;

    auto g_adj = adjacency_masks(g);
    auto h_adj = adjacency_masks(h.adjacency());

    auto ratio_of = [&](Mask w) -> std::pair<long long, long long> {
        long long a = alpha_masked(g_adj, w);
        long long b = beta_masked(g_adj, w);
        return {b, a};
    };
    auto better = [](std::pair<long long, long long> x, std::pair<long long, long long> y) {
        return x.first * y.second > y.first * x.second;
    };

    CliqueEnumerator en{h_adj};
    Mask all = (Mask{1} << n) - 1;
    en.bron_kerbosch(0, all, 0);

    std::pair<long long, long long> max_ratio{0, 1};
    Mask max_witness = 0;
    for (Mask w : en.found) {
        auto r = ratio_of(w);
        if (better(r, max_ratio)) {
            max_ratio = r;
            max_witness = w;
        }
    }

    if (n <= 10) {
        // Small enough to scan every nonempty clique of h, not only the
        // maximal ones; the definition ranges over all of them.
        std::pair<long long, long long> full_max{0, 1};
        Mask full_witness = 0;
        for (Mask w = 1; w <= all; ++w) {
            bool clique = true;
            for (Mask m = w; clique && m; m &= m - 1) {
                int v = std::countr_zero(m);
                if ((w & ~(h_adj[v] | (Mask{1} << v))) != 0) clique = false;
            }
            if (!clique) continue;
            auto r = ratio_of(w);
            if (better(r, full_max)) {
                full_max = r;
                full_witness = w;
            }
        }
        result.all_cliques_checked = true;
        result.max_on_maximal_clique = !better(full_max, max_ratio);
        if (better(full_max, max_ratio)) {
            max_ratio = full_max;
            max_witness = full_witness;
        }
    }

    result.beta = max_ratio.first;
    result.alpha = max_ratio.second;
    result.value = static_cast<double>(result.beta) / static_cast<double>(result.alpha);
    result.witness = mask_to_set(max_witness);
    return result;
}

} // namespace ccover
