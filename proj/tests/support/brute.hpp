#pragma once

// Independent brute-force reference implementations used only by tests.

#include <algorithm>
#include <optional>
#include <vector>

#include "strongcliques/graph.hpp"
#include "strongcliques/matching.hpp"

namespace strongcliques::brute {

// All matchings by explicit enumeration; returns the best total weight.
inline long long best_matching_weight(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    long long best = 0;
    std::vector<int> taken(g.n(), 0);
    auto rec = [&](auto&& self, int from, long long acc) -> void {
        best = std::max(best, acc);
        for (int i = from; i < g.m(); ++i) {
            auto [u, v] = g.edges()[i];
            if (taken[u] || taken[v]) continue;
            taken[u] = taken[v] = 1;
            self(self, i + 1, acc + wg.edge_weight[i]);
            taken[u] = taken[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

inline int max_matching_size(const Graph& g) {
    long long w = best_matching_weight(WeightedGraph::uniform(g, 1));
    return int(w);
}

// Largest number of s-vertices saturated by any matching avoiding the
// forbidden edges.
inline int best_saturation(const Graph& g, const VertexSet& s,
                           const std::vector<Edge>& forbidden) {
    std::vector<Edge> sorted_forbidden;
    for (auto e : forbidden) sorted_forbidden.push_back(make_edge(e.first, e.second));
    std::sort(sorted_forbidden.begin(), sorted_forbidden.end());
    Bitset sb = Bitset::of(g.n(), s);
    int best = 0;
    std::vector<int> taken(g.n(), 0);
    auto rec = [&](auto&& self, int from, int acc) -> void {
        best = std::max(best, acc);
        for (int i = from; i < g.m(); ++i) {
            auto [u, v] = g.edges()[i];
            if (taken[u] || taken[v]) continue;
            if (std::binary_search(sorted_forbidden.begin(), sorted_forbidden.end(),
                                   g.edges()[i]))
                continue;
            taken[u] = taken[v] = 1;
            self(self, i + 1, acc + (sb.test(u) ? 1 : 0) + (sb.test(v) ? 1 : 0));
            taken[u] = taken[v] = 0;
        }
    };
    rec(rec, 0, 0);
    return best;
}

// Independent sets by subset enumeration (n <= ~20).
inline std::vector<VertexSet> all_maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    uint32_t limit = uint32_t{1} << g.n();
    for (uint32_t mask = 0; mask < limit; ++mask) {
        bool independent = true;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) {
                independent = false;
                break;
            }
        if (!independent) continue;
        bool maximal = true;
        for (int w = 0; w < g.n() && maximal; ++w) {
            if (mask >> w & 1) continue;
            bool clash = false;
            g.adj(w).for_each([&](int u) {
                if (mask >> u & 1) clash = true;
            });
            if (!clash) maximal = false;
        }
        if (!maximal) continue;
        VertexSet s;
        for (int v = 0; v < g.n(); ++v)
            if (mask >> v & 1) s.push_back(v);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Definitional strong-clique test: intersects every maximal independent set.
inline bool is_strong_by_definition(const Graph& g, const VertexSet& c) {
    for (const auto& mis : all_maximal_independent_sets(g)) {
        bool hit = false;
        for (int v : c)
            if (std::binary_search(mis.begin(), mis.end(), v)) hit = true;
        if (!hit) return false;
    }
    return true;
}

// All maximal matchings of g (as sorted edge lists).
inline std::vector<std::vector<Edge>> all_maximal_matchings(const Graph& g) {
    std::vector<std::vector<Edge>> out;
    int m = g.m();
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        std::vector<int> deg(g.n(), 0);
        bool matching = true;
        for (int i = 0; i < m && matching; ++i)
            if (mask >> i & 1) {
                auto [u, v] = g.edges()[i];
                if (deg[u] || deg[v]) matching = false;
                deg[u] = deg[v] = 1;
            }
        if (!matching) continue;
        bool maximal = true;
        for (int i = 0; i < m && maximal; ++i) {
            if (mask >> i & 1) continue;
            auto [u, v] = g.edges()[i];
            if (!deg[u] && !deg[v]) maximal = false;
        }
        if (!maximal) continue;
        std::vector<Edge> chosen;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) chosen.push_back(g.edges()[i]);
        out.push_back(chosen);
    }
    return out;
}

}  // namespace strongcliques::brute
