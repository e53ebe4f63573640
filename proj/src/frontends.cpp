#include "ccover/frontends.hpp"

#include <algorithm>
#include <string>

namespace ccover {

IntersectionModel rectangles_to_model(const RectangleInstance& r) {
    const int n = static_cast<int>(r.rects.size());
    std::vector<Interval> xs(n), ys(n);
    for (int i = 0; i < n; ++i) {
        const auto& rc = r.rects[i];
        if (rc.x_lo > rc.x_hi || rc.y_lo > rc.y_hi)
            throw InputError("rectangle " + std::to_string(i) + " has lo > hi");
        xs[i] = {rc.x_lo, rc.x_hi};
        ys[i] = {rc.y_lo, rc.y_hi};
    }
    AdjacencyGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersects(xs[i], xs[j]) && intersects(ys[i], ys[j])) g.add_edge(i, j);

    std::vector<IntervalSupergraph> layers;
    layers.emplace_back(std::move(xs));
    layers.emplace_back(std::move(ys));
    return IntersectionModel::exact(std::move(layers), std::nullopt, std::move(g));
}

IntersectionModel boxes_to_model(const BoxInstance& b) {
    if (b.dim < 2) throw InputError("box instances need dimension >= 2");
    const int n = static_cast<int>(b.boxes.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(b.boxes[i].size()) != b.dim)
            throw InputError("box " + std::to_string(i) + " has " +
                             std::to_string(b.boxes[i].size()) + " axes, expected " +
                             std::to_string(b.dim));
        for (const Interval& iv : b.boxes[i])
            if (iv.lo > iv.hi)
                throw InputError("box " + std::to_string(i) + " has lo > hi");
    }

    AdjacencyGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool all = true;
            for (int a = 0; all && a < b.dim; ++a)
                all = intersects(b.boxes[i][a], b.boxes[j][a]);
            if (all) g.add_edge(i, j);
        }

    std::vector<IntervalSupergraph> layers;
    layers.reserve(b.dim);
    for (int a = 0; a < b.dim; ++a) {
        std::vector<Interval> axis(n);
        for (int i = 0; i < n; ++i) axis[i] = b.boxes[i][a];
        layers.emplace_back(std::move(axis));
    }
    return IntersectionModel::exact(std::move(layers), std::nullopt, std::move(g));
}

IntersectionModel chords_to_model(const ChordInstance& c) {
    const int n = static_cast<int>(c.chords.size());
    std::vector<ChordInstance::Chord> chords(c.chords);
    std::vector<std::int64_t> endpoints;
    endpoints.reserve(2 * n);
    for (auto& ch : chords) {
        if (ch.a > ch.b) std::swap(ch.a, ch.b);
        endpoints.push_back(ch.a);
        endpoints.push_back(ch.b);
    }
    std::sort(endpoints.begin(), endpoints.end());
    auto dup = std::adjacent_find(endpoints.begin(), endpoints.end());
    if (dup != endpoints.end())
        throw InputError("duplicate chord endpoint " + std::to_string(*dup));

    std::vector<Interval> intervals(n);
    for (int i = 0; i < n; ++i) intervals[i] = {chords[i].a, chords[i].b};

    // Strict containment: i < j iff chord i lies inside chord j.
    // Containment of closed intervals with distinct endpoints is transitive.
    std::vector<detail::DynBitset> succ(n, detail::DynBitset(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && chords[j].a < chords[i].a && chords[i].b < chords[j].b)
                succ[i].set(j);
    Poset containment = Poset::from_transitive_relation(n, std::move(succ));

    AdjacencyGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (chords_cross(chords[i], chords[j])) g.add_edge(i, j);

    std::vector<IntervalSupergraph> layers;
    layers.emplace_back(std::move(intervals));
    return IntersectionModel::exact(std::move(layers), std::move(containment), std::move(g));
}

IntersectionModel explicit_to_model(const ExplicitInstance& e) {
    if (e.n < 0) throw InputError("negative vertex count");
    if (e.n > 0 && e.layers.empty() && !e.poset_edges)
        throw InputError("explicit instance needs at least one interval layer or a poset");
    std::vector<IntervalSupergraph> layers;
    layers.reserve(e.layers.size());
    for (std::size_t k = 0; k < e.layers.size(); ++k) {
        if (static_cast<int>(e.layers[k].size()) != e.n)
            throw InputError("layer " + std::to_string(k + 1) + " has " +
                             std::to_string(e.layers[k].size()) + " intervals, expected " +
                             std::to_string(e.n));
        layers.emplace_back(e.layers[k]);
    }
    std::optional<Poset> base;
    if (e.poset_edges) base = Poset::close_transitively(e.n, *e.poset_edges);

    if (e.g_edges) {
        AdjacencyGraph g(e.n);
        for (auto [u, v] : *e.g_edges) g.add_edge(u, v);
        return IntersectionModel::with_explicit_graph(std::move(layers), std::move(base),
                                                      std::move(g));
    }
    AdjacencyGraph g = conjunction_adjacency(layers, base);
    return IntersectionModel::exact(std::move(layers), std::move(base), std::move(g));
}

AdjacencyGraph conjunction_adjacency(const std::vector<IntervalSupergraph>& layers,
                                     const std::optional<Poset>& poset_base) {
    int n = poset_base ? poset_base->size() : (layers.empty() ? 0 : layers.front().size());
    if (!poset_base && layers.empty()) return AdjacencyGraph(0);
    AdjacencyGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool all = true;
            for (const auto& layer : layers)
                if (!layer.adjacent(i, j)) {
                    all = false;
                    break;
                }
            if (all && poset_base && (poset_base->less(i, j) || poset_base->less(j, i)))
                all = false;
            if (all) g.add_edge(i, j);
        }
    return g;
}

} // namespace ccover
