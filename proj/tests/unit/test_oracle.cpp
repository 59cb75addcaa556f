#include <doctest.h>

#include <algorithm>

#include "strongcliques/corpus.hpp"
#include "strongcliques/oracle.hpp"
#include "support/brute.hpp"

using namespace strongcliques;

TEST_CASE("maximal independent sets, small fixtures") {
    auto kn = maximal_independent_sets(complete(4));
    CHECK(kn == std::vector<VertexSet>{{0}, {1}, {2}, {3}});

    auto c5 = maximal_independent_sets(cycle(5));
    CHECK(c5 == std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});

    auto p4 = maximal_independent_sets(path(4));
    CHECK(p4 == std::vector<VertexSet>{{0, 2}, {0, 3}, {1, 3}});

    CHECK(maximal_independent_sets(Graph::build(0, {})) ==
          std::vector<VertexSet>{{}});
}

TEST_CASE("maximal cliques, small fixtures") {
    CHECK(maximal_cliques(cycle(5)).size() == 5);
    CHECK(maximal_cliques(complete_bipartite(3, 3)).size() == 9);
    // cliques of co(P2+P3) against the complement's independent sets
    Graph g = co_p2_plus_p3();
    CHECK(maximal_cliques(g) == maximal_independent_sets(complement(g)));
}

TEST_CASE("enumerators agree with brute force on all 5-vertex graphs") {
    for_each_labeled_graph(5, [](const Graph& g) {
        CHECK(maximal_independent_sets(g) == brute::all_maximal_independent_sets(g));
        CHECK(maximal_cliques(g) ==
              brute::all_maximal_independent_sets(complement(g)));
        return true;
    });
}

TEST_CASE("strong clique oracle") {
    Graph c5 = cycle(5);
    auto res = is_strong_clique(c5, {1, 2});
    CHECK_FALSE(res.verdict);
    // the witness is a maximal independent set avoiding {1,2}
    CHECK(res.witness.size() == 2);
    for (int v : res.witness) {
        CHECK(v != 1);
        CHECK(v != 2);
    }

    CHECK(is_strong_clique(complete_bipartite(3, 3), {0, 3}).verdict);
    CHECK(is_strong_clique(complete(4), {0, 1, 2, 3}).verdict);

    CHECK_THROWS_AS(is_strong_clique(c5, {}), std::invalid_argument);
    CHECK_THROWS_AS(is_strong_clique(c5, {0, 2}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(is_strong_clique(c5, {0, 2}),
                         doctest::Contains("non-adjacent"),
                         std::invalid_argument);
}

TEST_CASE("strong cliques of fixtures") {
    CHECK(strong_cliques_all(cycle(5)).empty());
    CHECK(strong_cliques_all(path(4)) ==
          std::vector<VertexSet>{{0, 1}, {2, 3}});
    // F_2: exactly the four triangles
    Graph f2 = f_n(2);
    auto strong = strong_cliques_all(f2);
    auto tris = all_triangles(f2);
    REQUIRE(strong.size() == tris.size());
    for (const auto& t : tris) {
        VertexSet s(t.begin(), t.end());
        CHECK(std::find(strong.begin(), strong.end(), s) != strong.end());
    }
    // diamond: both triangles are strong
    CHECK(strong_cliques_all(diamond()).size() == 2);
}

TEST_CASE("strong clique verdicts match the definitional route on n<=6") {
    for (uint64_t mask = 0; mask < (uint64_t{1} << 15); mask += 5) {
        Graph g = graph_from_mask(6, mask);
        for (const auto& q : maximal_cliques(g)) {
            if (q.empty()) continue;
            CHECK(is_strong_clique(g, q).verdict ==
                  brute::is_strong_by_definition(g, q));
        }
    }
}

TEST_CASE("invariants report") {
    auto c5 = invariants_report(cycle(5));
    CHECK(c5.alpha == 2);
    CHECK(c5.idom == 2);
    CHECK(c5.theta == 3);
    CHECK(c5.omega == 2);
    CHECK(c5.well_covered);
    CHECK_FALSE(c5.semi_perfect);

    auto c4 = invariants_report(cycle(4));
    CHECK(c4.alpha == 2);
    CHECK(c4.idom == 2);
    CHECK(c4.theta == 2);

    auto k4 = invariants_report(complete(4));
    CHECK(k4.alpha == 1);
    CHECK(k4.idom == 1);
    CHECK(k4.theta == 1);

    auto nil = invariants_report(Graph::build(0, {}));
    CHECK(nil.alpha == 0);
    CHECK(nil.theta == 0);
    CHECK(nil.well_covered);
}

TEST_CASE("localizable oracle") {
    CHECK_FALSE(localizable_exact(diamond()).localizable);
    CHECK_FALSE(localizable_exact(cycle(5)).localizable);

    auto co = localizable_exact(co_p2_plus_p3());
    REQUIRE(co.localizable);
    REQUIRE(co.partition.has_value());
    for (const auto& part : *co.partition)
        CHECK(is_strong_clique(co_p2_plus_p3(), part).verdict);

    auto empty = localizable_exact(Graph::build(0, {}));
    CHECK(empty.localizable);
    CHECK(empty.partition->empty());

    // localizability is equivalent to i == theta on every 5-vertex graph
    for_each_labeled_graph(5, [](const Graph& g) {
        auto inv = invariants_report(g);
        CHECK(localizable_exact(g).localizable == (inv.idom == inv.theta));
        return true;
    });
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number_exact(complete(5)) == 5);
    CHECK(chromatic_number_exact(cycle(5)) == 3);
    CHECK(chromatic_number_exact(cycle(6)) == 2);
    CHECK(chromatic_number_exact(Graph::build(3, {})) == 1);
    CHECK(chromatic_number_exact(Graph::build(0, {})) == 0);

    CHECK(chromatic_index_exact(path(4)) == 2);
    CHECK(chromatic_index_exact(complete_bipartite(3, 3)) == 3);
    CHECK(chromatic_index_exact(petersen()) == 4);
}

TEST_CASE("lemma-style witnesses: domination inside the neighborhood") {
    // Whenever the oracle reports non-strong, its witness restricted to N(C)
    // dominates C (the definitional equivalence on small graphs).
    for (uint64_t mask = 0; mask < (uint64_t{1} << 10); ++mask) {
        Graph g = graph_from_mask(5, mask);
        for (const auto& q : maximal_cliques(g)) {
            if (q.empty()) continue;
            auto res = is_strong_clique(g, q);
            if (res.verdict) continue;
            Bitset qb = Bitset::of(g.n(), q);
            Bitset wb = Bitset::of(g.n(), res.witness);
            CHECK_FALSE(wb.intersects(qb));
            for (int v : q) CHECK(g.adj(v).intersects(wb));
        }
    }
}
