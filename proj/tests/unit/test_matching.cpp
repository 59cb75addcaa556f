#include <doctest.h>

#include <random>

#include "strongcliques/corpus.hpp"
#include "strongcliques/matching.hpp"
#include "support/brute.hpp"

using namespace strongcliques;

namespace {

bool is_valid_matching(const Graph& g, const Matching& m) {
    std::vector<int> deg(g.n(), 0);
    for (auto [u, v] : m.edges) {
        if (g.edge_index(u, v) < 0) return false;
        if (deg[u] || deg[v]) return false;
        deg[u] = deg[v] = 1;
    }
    return true;
}

}  // namespace

TEST_CASE("max weight matching small fixtures") {
    auto tri = max_weight_matching(WeightedGraph::uniform(cycle(3), 1));
    CHECK(tri.weight == 1);

    auto c4 = max_weight_matching(WeightedGraph::uniform(cycle(4), 1));
    CHECK(c4.weight == 2);

    auto empty = max_weight_matching(WeightedGraph::uniform(Graph::build(0, {}), 1));
    CHECK(empty.weight == 0);

    auto isolated = max_weight_matching(WeightedGraph::uniform(Graph::build(3, {}), 1));
    CHECK(isolated.weight == 0);

    // Weighted detour beats the middle edge: P4 with weights 3-4-3.
    WeightedGraph wp4 = WeightedGraph::from_pairs(
        path(4), {{{0, 1}, 3}, {{1, 2}, 4}, {{2, 3}, 3}});
    auto best = max_weight_matching(wp4);
    CHECK(best.weight == 6);
    CHECK(is_valid_matching(wp4.graph, best.matching));

    CHECK_THROWS_AS(WeightedGraph::from_pairs(path(3), {{{0, 2}, 1}}),
                    std::invalid_argument);
}

TEST_CASE("max weight matching matches brute force on random graphs") {
    std::mt19937_64 rng(20240917);
    for (int iter = 0; iter < 800; ++iter) {
        int n = 2 + int(rng() % 7);  // up to 8 vertices
        Graph g = random_graph(n, 0.2 + 0.6 * double(rng() % 100) / 100.0, rng());
        WeightedGraph wg{g, {}};
        wg.edge_weight.resize(g.m());
        for (int i = 0; i < g.m(); ++i) wg.edge_weight[i] = rng() % 6;
        auto res = max_weight_matching(wg);
        CHECK(is_valid_matching(g, res.matching));
        long long recomputed = 0;
        for (auto [u, v] : res.matching.edges) recomputed += wg.weight_of(u, v);
        CHECK(recomputed == res.weight);
        CHECK(res.weight == brute::best_matching_weight(wg));
    }
}

TEST_CASE("perfect matching") {
    CHECK(has_perfect_matching(cycle(4)).exists);
    CHECK_FALSE(has_perfect_matching(cycle(5)).exists);
    auto pet = has_perfect_matching(petersen());
    REQUIRE(pet.exists);
    CHECK(pet.matching->edges.size() == 5);
    CHECK(is_valid_matching(petersen(), *pet.matching));
    CHECK_FALSE(has_perfect_matching(complete_bipartite(1, 3)).exists);

    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        int n = 2 + int(rng() % 7);
        Graph g = random_graph(n, 0.5, rng());
        bool expected = n % 2 == 0 && brute::max_matching_size(g) == n / 2;
        CHECK(has_perfect_matching(g).exists == expected);
    }
}

TEST_CASE("matchings saturating a set") {
    // P4 with interior vertices as targets
    CHECK(exists_matching_saturating(path(4), {1, 2}, {}));
    // star: the center is shared, so the three leaves cannot all be saturated
    CHECK_FALSE(exists_matching_saturating(complete_bipartite(1, 3), {1, 2, 3}, {}));
    // triangle with pendants at two corners, triangle edges forbidden,
    // threshold two
    Graph g = Graph::build(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
    std::vector<Edge> forbidden{{0, 1}, {0, 2}, {1, 2}};
    CHECK(exists_matching_saturating(g, {0, 1, 2}, forbidden, 2));
    CHECK_FALSE(exists_matching_saturating(g, {0, 1, 2}, forbidden, 3));

    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 3 + int(rng() % 6);
        Graph h = random_graph(n, 0.5, rng());
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) s.push_back(v);
        std::vector<Edge> forb;
        for (const auto& e : h.edges())
            if (rng() % 4 == 0) forb.push_back(e);
        int best = brute::best_saturation(h, s, forb);
        for (int t = 0; t <= int(s.size()); ++t)
            CHECK(exists_matching_saturating(h, s, forb, t) == (best >= t));
        auto witness = find_matching_saturating(h, s, forb, best);
        REQUIRE(witness.has_value());
        CHECK(is_valid_matching(h, *witness));
    }
}
