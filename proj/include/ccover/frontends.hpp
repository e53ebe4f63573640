#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ccover/cover.hpp"

namespace ccover {

/// Axis-parallel closed rectangles; shared boundary counts as intersection.
struct RectangleInstance {
    struct Rect {
        std::int64_t x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    };
    std::vector<Rect> rects;
};

/// Axis-parallel closed boxes in R^t, t >= 2; boxes[i][axis] is an Interval.
struct BoxInstance {
    int dim = 0;
    std::vector<std::vector<Interval>> boxes;
};

/// Chord diagram of a circle graph: endpoints are distinct integers on the
/// circle boundary order, chords normalized so a < b.
struct ChordInstance {
    struct Chord {
        std::int64_t a = 0, b = 0;
    };
    std::vector<Chord> chords;
};

/// Generic ingestion: interval layers, optional poset base, optional
/// explicit edge set of G (generic-supergraph mode).
struct ExplicitInstance {
    int n = 0;
    std::vector<std::vector<Interval>> layers;
    std::optional<std::vector<std::pair<VertexId, VertexId>>> poset_edges;
    std::optional<std::vector<std::pair<VertexId, VertexId>>> g_edges;
};

/// Layer 1 = x-intervals, perfect base = y-interval layer;
/// G = closed rectangle intersection, exact intersection.
IntersectionModel rectangles_to_model(const RectangleInstance& r);

/// Axes 1..t-1 are interval layers, axis t the perfect base;
/// G = all-axes intersection, exact.
IntersectionModel boxes_to_model(const BoxInstance& b);

/// Layer 1 = chord-interval intersection, perfect base = strict containment
/// poset; G = chord interleaving, which equals the layer conjunction.
IntersectionModel chords_to_model(const ChordInstance& c);

/// Without g_edges: G = conjunction of the layers, exact. With g_edges:
/// every layer is checked to be a supergraph of G (ModelError otherwise)
/// and the model is non-exact (generic base solver territory).
IntersectionModel explicit_to_model(const ExplicitInstance& e);

/// Conjunction of layer adjacencies (and poset incomparability when given);
/// the reference adjacency every exact model's G must equal.
AdjacencyGraph conjunction_adjacency(const std::vector<IntervalSupergraph>& layers,
                                     const std::optional<Poset>& poset_base);

inline AdjacencyGraph conjunction_adjacency(const IntersectionModel& m) {
    return conjunction_adjacency(m.interval_layers(), m.poset_base());
}

/// Direct geometric predicate: do two chords cross?
inline bool chords_cross(const ChordInstance::Chord& p, const ChordInstance::Chord& q) {
    return (p.a < q.a && q.a < p.b && p.b < q.b) || (q.a < p.a && p.a < q.b && q.b < p.b);
}

} // namespace ccover
