#include "strongcliques/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "strongcliques/isomorphism.hpp"

namespace strongcliques {

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1) edges.push_back({u, v});
    return Graph::build(n, edges);
}

void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& cb) {
    if (pair_count(n) > 62)
        throw std::invalid_argument("for_each_labeled_graph: n too large");
    uint64_t limit = uint64_t{1} << pair_count(n);
    for (uint64_t mask = 0; mask < limit; ++mask)
        if (!cb(graph_from_mask(n, mask))) return;
}

Graph random_graph(int n, double density, uint64_t seed) {
    std::mt19937_64 rng(seed);
    uint64_t threshold = uint64_t(density * double(~uint64_t{0}));
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() <= threshold) edges.push_back({u, v});
    return Graph::build(n, edges);
}

std::vector<Graph> connected_subcubic_graphs(int max_n) {
    std::vector<Graph> all;
    std::vector<Graph> previous{Graph::build(1, {})};
    all.push_back(previous[0]);
    for (int n = 2; n <= max_n; ++n) {
        std::map<uint64_t, std::vector<Graph>> buckets;
        std::vector<Graph> next;
        auto consider = [&](const Graph& g) {
            uint64_t key = invariant_key(g);
            auto& bucket = buckets[key];
            for (const Graph& other : bucket)
                if (are_isomorphic(g, other)) return;
            bucket.push_back(g);
            next.push_back(g);
        };
        for (const Graph& base : previous) {
            // Attach a new vertex to every feasible nonempty subset of
            // degree-deficient vertices (connected graphs keep a removable
            // non-cut vertex, so every target arises this way).
            std::vector<int> slots;
            for (int v = 0; v < base.n(); ++v)
                if (base.degree(v) < 3) slots.push_back(v);
            int k = int(slots.size());
            for (int mask = 1; mask < (1 << k); ++mask) {
                if (__builtin_popcount(unsigned(mask)) > 3) continue;
                std::vector<Edge> edges = base.edges();
                for (int i = 0; i < k; ++i)
                    if ((mask >> i) & 1) edges.push_back({slots[i], base.n()});
                consider(Graph::build(base.n() + 1, edges));
            }
        }
        for (const Graph& g : next) all.push_back(g);
        previous = std::move(next);
    }
    return all;
}

Graph random_connected_cubic(int n, uint64_t seed) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_connected_cubic: n must be even, >= 4");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        // Pairing model: three stubs per vertex, shuffled and paired off.
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i) stubs.push_back(v);
        for (size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng() % i]);
        std::vector<Edge> edges;
        bool simple = true;
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
        for (size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u][v]) {
                simple = false;
                break;
            }
            seen[u][v] = seen[v][u] = true;
            edges.push_back(make_edge(u, v));
        }
        if (!simple) continue;
        Graph g = Graph::build(n, edges);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_cubic: rejection budget exhausted");
}

}  // namespace strongcliques
