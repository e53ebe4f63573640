#include <doctest.h>

#include <random>

#include "ccover/graph.hpp"
#include "testutil.hpp"

using namespace ccover;
using testutil::set_of;

TEST_CASE("vertex set is sorted and rejects duplicates") {
    VertexSet s(std::vector<VertexId>{3, 1, 2});
    CHECK(s.ids() == std::vector<VertexId>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK(!s.contains(0));
    CHECK_THROWS_AS(VertexSet(std::vector<VertexId>{1, 1}), InputError);
}

TEST_CASE("induced subgraph of a triangle on {0,2} is a single edge") {
    auto g = testutil::complete_graph(3);
    auto sub = induced_subgraph(g, set_of({0, 2}));
    CHECK(sub.graph.size() == 2);
    CHECK(sub.graph.adjacent(0, 1));
    CHECK(sub.to_original == std::vector<VertexId>{0, 2});
    CHECK(sub.original_of(1) == 2);
    CHECK(sub.local_of(2) == 1);
    CHECK(sub.local_of(1) == -1);
}

TEST_CASE("induced subgraph on the empty set is the empty graph") {
    auto g = testutil::complete_graph(4);
    auto sub = induced_subgraph(g, VertexSet{});
    CHECK(sub.graph.size() == 0);
    CHECK(sub.graph.edge_count() == 0);
}

TEST_CASE("induced subgraph of a path on its endpoints has no edges") {
    auto g = testutil::path_graph(3);
    auto sub = induced_subgraph(g, set_of({0, 2}));
    CHECK(sub.graph.size() == 2);
    CHECK(sub.graph.edge_count() == 0);
}

TEST_CASE("induced subgraph rejects out-of-range ids") {
    auto g = testutil::path_graph(3);
    CHECK_THROWS_AS(induced_subgraph(g, set_of({0, 5})), InputError);
}

TEST_CASE("clique and independence predicates") {
    auto triangle = testutil::complete_graph(3);
    auto path = testutil::path_graph(3);

    CHECK(is_clique(triangle, set_of({0, 1, 2})));
    CHECK(!is_clique(path, set_of({0, 2})));
    CHECK(is_clique(path, VertexSet{}));
    CHECK(is_clique(path, set_of({1})));

    CHECK(is_independent(path, set_of({0, 2})));
    CHECK(!is_independent(triangle, set_of({0, 1})));
    CHECK(is_independent(triangle, set_of({2})));

    CHECK_THROWS_AS(is_clique(path, set_of({7})), InputError);
}

TEST_CASE("separation predicate") {
    auto path = testutil::path_graph(3);
    CHECK(are_separated(path, set_of({0}), set_of({2})));
    CHECK(!are_separated(path, set_of({0}), set_of({1})));
    CHECK(are_separated(path, VertexSet{}, VertexSet::full(3)));
    CHECK_THROWS_AS(are_separated(path, set_of({0, 1}), set_of({1})), InputError);
}

TEST_CASE("self-loops are rejected") {
    AdjacencyGraph g(2);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
}

TEST_CASE("double induction equals induction on the intersection") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 4 + static_cast<int>(rng() % 7);
        auto g = testutil::random_graph(rng, n, 0.4);

        std::vector<VertexId> wa, wb_local;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) wa.push_back(v);
        VertexSet a(wa);
        auto sub1 = induced_subgraph(g, a);
        for (int v = 0; v < static_cast<int>(a.size()); ++v)
            if (rng() % 2) wb_local.push_back(v);
        auto sub2 = induced_subgraph(sub1.graph, VertexSet(wb_local));

        std::vector<VertexId> both;
        for (VertexId local : wb_local) both.push_back(sub1.original_of(local));
        auto direct = induced_subgraph(g, VertexSet(both));

        REQUIRE(sub2.graph.size() == direct.graph.size());
        for (int i = 0; i < sub2.graph.size(); ++i)
            for (int j = i + 1; j < sub2.graph.size(); ++j)
                CHECK(sub2.graph.adjacent(i, j) == direct.graph.adjacent(i, j));
    }
}
