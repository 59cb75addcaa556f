#pragma once

#include <optional>
#include <vector>

#include "strongcliques/graph.hpp"

namespace strongcliques {

// Exact exponential-time reference implementations of the strong-clique
// concepts. Everything here is ground truth for the polynomial solvers and
// is meant for small graphs (n <= ~30 for enumeration, ~20 for clique cover).

// All inclusion-maximal independent sets, each once, in lexicographic order
// of their sorted vertex lists. The empty graph yields {{}}.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct StrongCliqueWitness {
    bool verdict;
    VertexSet witness;  // maximal independent set disjoint from C when false
};

// C must be a nonempty clique; rejects otherwise (naming a non-adjacent pair).
StrongCliqueWitness is_strong_clique(const Graph& g, const VertexSet& c);

// First maximal independent set of g disjoint from C, if any (Lemma-style
// "dominated by an independent set" witness). C need not be a clique here.
std::optional<VertexSet> find_disjoint_mis(const Graph& g, const VertexSet& c);

// Every strong clique is a maximal clique; this filters maximal_cliques.
std::vector<VertexSet> strong_cliques_all(const Graph& g);

struct InvariantsReport {
    int alpha;  // independence number
    int idom;   // independent domination number i(G)
    int theta;  // clique cover number
    int omega;  // clique number
    bool well_covered;  // i == alpha
    bool semi_perfect;  // theta == alpha
};
InvariantsReport invariants_report(const Graph& g);

struct LocalizableReport {
    bool localizable;
    // Lexicographically-first partition into strong cliques when true.
    std::optional<std::vector<VertexSet>> partition;
};
LocalizableReport localizable_exact(const Graph& g);

// Exact chromatic number by iterative-deepening branch and bound, vertices
// ordered largest-degree-first.
int chromatic_number_exact(const Graph& g);

// Some maximum clique (via full enumeration; small graphs only).
VertexSet maximum_clique(const Graph& g);

// chi'(g) computed as the chromatic number of the line graph.
int chromatic_index_exact(const Graph& g);

// Validates that c is a sorted duplicate-free clique of g; throws otherwise.
// allow_empty controls whether the empty set passes.
void require_clique(const Graph& g, const VertexSet& c, bool allow_empty);

}  // namespace strongcliques
