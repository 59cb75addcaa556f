#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "strongcliques/graph.hpp"

namespace strongcliques {

// Every labeled graph on n vertices, by adjacency-mask order. The callback
// returns false to stop early.
void for_each_labeled_graph(int n, const std::function<bool(const Graph&)>& cb);

// Decodes one adjacency mask (bit i covers the i-th pair in lexicographic
// (u,v) order) into a graph.
Graph graph_from_mask(int n, uint64_t mask);
int pair_count(int n);

// Deterministic G(n, p~density) sample; density in [0,1].
Graph random_graph(int n, double density, uint64_t seed);

// All connected graphs with maximum degree <= 3 on 1..max_n vertices, up to
// isomorphism, built by vertex extension with isomorphism rejection.
std::vector<Graph> connected_subcubic_graphs(int max_n);

// Deterministic random connected cubic graph on n vertices (n even, >= 4) via
// the pairing model with simplicity and connectivity rejection.
Graph random_connected_cubic(int n, uint64_t seed);

}  // namespace strongcliques
