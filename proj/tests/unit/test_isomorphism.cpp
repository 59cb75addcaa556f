#include <doctest.h>

#include "strongcliques/corpus.hpp"
#include "strongcliques/isomorphism.hpp"

using namespace strongcliques;

TEST_CASE("isomorphism fixtures") {
    CHECK(are_isomorphic(cycle(5), complement(cycle(5))));
    CHECK_FALSE(are_isomorphic(path(4), complete_bipartite(1, 3)));
    CHECK(are_isomorphic(co_c6(), co_c6()));
    CHECK_FALSE(are_isomorphic(co_c6(), complete_bipartite(3, 3)));
    CHECK_FALSE(are_isomorphic(cycle(6), cycle(3)));

    auto iso = find_isomorphism(petersen(), complement(line_graph(complete(5)).graph));
    REQUIRE(iso.has_value());
}

TEST_CASE("found maps preserve adjacency") {
    Graph a = f_n(2);
    Graph b = f_n(2);
    auto iso = find_isomorphism(a, b);
    REQUIRE(iso.has_value());
    for (int u = 0; u < a.n(); ++u)
        for (int v = u + 1; v < a.n(); ++v)
            CHECK(a.adjacent(u, v) == b.adjacent((*iso)[u], (*iso)[v]));
}

TEST_CASE("relabeling is always recognized") {
    // permuted copies of assorted graphs
    for (uint64_t mask : {37ull, 481ull, 777ull, 1023ull, 555ull}) {
        Graph g = graph_from_mask(5, mask);
        std::vector<int> perm{2, 0, 4, 1, 3};
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges()) edges.push_back(make_edge(perm[u], perm[v]));
        CHECK(are_isomorphic(g, Graph::build(5, edges)));
    }
}

TEST_CASE("invariant key separates non-isomorphic pairs when sizes differ") {
    CHECK(invariant_key(cycle(6)) != invariant_key(cycle(3)));
    CHECK(invariant_key(path(4)) != invariant_key(complete_bipartite(1, 3)));
}

TEST_CASE("subcubic corpus generation") {
    auto graphs = connected_subcubic_graphs(6);
    // counts per order: 1, 1, 2, 6, 10, 29
    std::vector<int> count(7, 0);
    for (const auto& g : graphs) {
        ++count[g.n()];
        CHECK(degree_profile(g).is_subcubic);
        CHECK(is_connected(g));
    }
    CHECK(count[1] == 1);
    CHECK(count[2] == 1);
    CHECK(count[3] == 2);
    CHECK(count[4] == 6);
    // pairwise non-isomorphic at n = 4
    std::vector<Graph> quads;
    for (const auto& g : graphs)
        if (g.n() == 4) quads.push_back(g);
    for (size_t i = 0; i < quads.size(); ++i)
        for (size_t j = i + 1; j < quads.size(); ++j)
            CHECK_FALSE(are_isomorphic(quads[i], quads[j]));
}

TEST_CASE("random cubic generator") {
    for (uint64_t seed : {1ull, 2ull, 3ull}) {
        Graph g = random_connected_cubic(10, seed);
        CHECK(degree_profile(g).is_cubic);
        CHECK(is_connected(g));
        CHECK(random_connected_cubic(10, seed) == g);  // deterministic
    }
}
