#include <doctest.h>

#include <algorithm>
#include <random>

#include "strongcliques/corpus.hpp"
#include "strongcliques/isomorphism.hpp"
#include "strongcliques/linegraph.hpp"
#include "strongcliques/oracle.hpp"
#include "support/brute.hpp"

using namespace strongcliques;

namespace {

bool graph_has_isolated(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("recognition fixtures") {
    // P3 = L(P4)
    auto p3 = recognize_line_graph(path(3));
    REQUIRE(p3.recognized());
    CHECK(are_isomorphic(p3.root->root, path(4)));

    // K3 gets the canonical claw root
    auto k3 = recognize_line_graph(complete(3));
    REQUIRE(k3.recognized());
    CHECK(are_isomorphic(k3.root->root, complete_bipartite(1, 3)));

    // the claw itself is not a line graph
    auto claw = recognize_line_graph(complete_bipartite(1, 3));
    CHECK_FALSE(claw.recognized());
    CHECK(claw.obstruction.size() == 4);

    // K_{2,3} contains a claw
    CHECK_FALSE(recognize_line_graph(complete_bipartite(2, 3)).recognized());

    // empty graphs and isolated vertices
    auto nil = recognize_line_graph(Graph::build(0, {}));
    REQUIRE(nil.recognized());
    CHECK(nil.root->root.n() == 0);
    auto dots = recognize_line_graph(Graph::build(2, {}));
    REQUIRE(dots.recognized());
    CHECK(dots.root->root.m() == 2);  // two disjoint root edges
}

TEST_CASE("recognition round trip on assorted roots") {
    std::vector<Graph> roots{path(2),  path(5),   cycle(6),      complete(4),
                             complete(5), petersen(), co_c6(),    f_n(2),
                             complete_bipartite(3, 3), complete_bipartite(2, 4)};
    for (const auto& h : roots) {
        auto lg = line_graph(h);
        auto rec = recognize_line_graph(lg.graph);
        REQUIRE(rec.recognized());
        CHECK(are_isomorphic(line_graph(rec.root->root).graph, lg.graph));
    }
}

TEST_CASE("recognition round trip on all labeled roots with 4 vertices") {
    for_each_labeled_graph(4, [](const Graph& h) {
        if (graph_has_isolated(h)) return true;
        auto lg = line_graph(h);
        auto rec = recognize_line_graph(lg.graph);
        REQUIRE(rec.recognized());
        CHECK(are_isomorphic(line_graph(rec.root->root).graph, lg.graph));
        return true;
    });
}

TEST_CASE("random non-line graphs yield small obstructions") {
    std::mt19937_64 rng(5150);
    int failures = 0;
    for (int iter = 0; iter < 200 && failures < 25; ++iter) {
        Graph g = random_graph(7, 0.45, rng());
        auto rec = recognize_line_graph(g);
        if (rec.recognized()) continue;
        ++failures;
        REQUIRE(rec.obstruction.size() >= 4);
        REQUIRE(rec.obstruction.size() <= 6);
        // the obstruction really is an induced non-line subgraph
        CHECK_FALSE(recognize_line_graph(g.induced(rec.obstruction)).recognized());
    }
    CHECK(failures > 0);
}

TEST_CASE("edge families fixtures") {
    auto tri = edge_families(complete(3));
    CHECK(tri.triangles.size() == 1);
    REQUIRE(tri.maximal.size() == 1);
    CHECK(tri.maximal[0].kind == EdgeFamilies::Kind::Triangle);
    CHECK(tri.maximal[0].edge_ids == std::vector<int>{0, 1, 2});

    auto claw = edge_families(complete_bipartite(1, 3));
    REQUIRE(claw.maximal.size() == 1);
    CHECK(claw.maximal[0].kind == EdgeFamilies::Kind::Star);
    CHECK(claw.maximal[0].edge_ids.size() == 3);

    auto c4 = edge_families(cycle(4));
    CHECK(c4.triangles.empty());
    CHECK(c4.maximal.size() == 4);
    for (const auto& m : c4.maximal) CHECK(m.edge_ids.size() == 2);

    CHECK_THROWS_AS(edge_families(Graph::build(3, {{0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("translate clique fixtures") {
    // L(P4) = P3; the middle-star pair maps to a sub-star at vertex 1 of P4
    auto rec = recognize_line_graph(path(3));
    REQUIRE(rec.recognized());
    const auto& map = *rec.root;
    // find the two line-graph vertices whose root edges share a vertex
    auto t = translate_clique(map, {0, 1});
    CHECK(t.shape == CliqueShape::SubStar);
    REQUIRE(t.star_vertex.has_value());

    auto single = translate_clique(map, {2});
    CHECK(single.shape == CliqueShape::SubStar);

    CHECK_THROWS_AS(translate_clique(map, {0, 2}), std::invalid_argument);

    // L(K3) full triangle translates to the star of the canonical claw root
    auto k3 = recognize_line_graph(complete(3));
    auto full = translate_clique(*k3.root, {0, 1, 2});
    CHECK(full.shape == CliqueShape::SubStar);
    CHECK(full.star_vertex.has_value());

    // with the triangle root it classifies as a triangle instead
    Graph triangle_root = complete(3);
    auto lg = line_graph(triangle_root);
    auto tri_map = RootGraphMap::checked(triangle_root, lg.root_edge_of_vertex,
                                         lg.graph);
    auto as_triangle = translate_clique(tri_map, {0, 1, 2});
    CHECK(as_triangle.shape == CliqueShape::Triangle);
}

TEST_CASE("observation suite: structures of L(H) via the root") {
    // maximal cliques of L(H) <-> members of M_H; maximal independent sets of
    // L(H) <-> maximal matchings of H (exercised on all connected graphs with
    // up to 5 vertices and no isolated vertices)
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& h) {
            if (graph_has_isolated(h) || !is_connected(h)) return true;
            auto lg = line_graph(h);
            auto fam = edge_families(h);

            auto cliques = maximal_cliques(lg.graph);
            std::vector<std::vector<int>> expected;
            for (const auto& m : fam.maximal) expected.push_back(m.edge_ids);
            std::vector<std::vector<int>> got;
            for (const auto& q : cliques) got.push_back(q);
            CHECK(got == expected);  // line-graph vertex v is root edge v

            auto mis = maximal_independent_sets(lg.graph);
            auto matchings = brute::all_maximal_matchings(h);
            REQUIRE(mis.size() == matchings.size());
            std::vector<std::vector<Edge>> mis_as_edges;
            for (const auto& s : mis) {
                std::vector<Edge> es;
                for (int v : s) es.push_back(lg.root_edge_of_vertex[v]);
                mis_as_edges.push_back(es);
            }
            std::sort(mis_as_edges.begin(), mis_as_edges.end());
            std::sort(matchings.begin(), matchings.end());
            CHECK(mis_as_edges == matchings);
            return true;
        });
    }
}

TEST_CASE("well-coveredness of co(L(H)) equals equal-size members") {
    for (int n = 2; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& h) {
            if (graph_has_isolated(h)) return true;
            auto lg = line_graph(h);
            auto fam = edge_families(h);
            bool equal_sizes = true;
            for (const auto& m : fam.maximal)
                if (m.edge_ids.size() != fam.maximal[0].edge_ids.size())
                    equal_sizes = false;
            auto inv = invariants_report(complement(lg.graph));
            CHECK(inv.well_covered == equal_sizes);
            return true;
        });
    }
}
