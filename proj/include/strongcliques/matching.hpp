#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strongcliques/graph.hpp"

namespace strongcliques {

// Graph with nonnegative integer edge weights, aligned with graph.edges().
struct WeightedGraph {
    Graph graph;
    std::vector<long long> edge_weight;

    static WeightedGraph uniform(const Graph& g, long long w = 1);
    static WeightedGraph from_pairs(
        const Graph& g, const std::vector<std::pair<Edge, long long>>& weights);
    long long weight_of(int u, int v) const;
};

// Pairwise vertex-disjoint edges of a host graph.
struct Matching {
    std::vector<Edge> edges;
};

struct MatchingResult {
    Matching matching;
    long long weight;
};

// Maximum-weight matching on a general graph (Edmonds blossom algorithm with
// integer dual variables; weights are doubled internally so duals stay
// integral). Any optimum may be returned.
MatchingResult max_weight_matching(const WeightedGraph& wg);

struct PerfectMatchingResult {
    bool exists;
    std::optional<Matching> matching;
};
PerfectMatchingResult has_perfect_matching(const Graph& g);

// True iff some matching of g avoiding `forbidden` saturates at least
// `threshold` vertices of s (threshold < 0 means all of s). Implemented by
// weighting each usable edge with |e intersect s|.
bool exists_matching_saturating(const Graph& g, const VertexSet& s,
                                const std::vector<Edge>& forbidden,
                                int threshold = -1);

// Same decision, but hands back a witness matching restricted to edges with
// positive weight when the answer is yes.
std::optional<Matching> find_matching_saturating(const Graph& g,
                                                 const VertexSet& s,
                                                 const std::vector<Edge>& forbidden,
                                                 int threshold = -1);

}  // namespace strongcliques
