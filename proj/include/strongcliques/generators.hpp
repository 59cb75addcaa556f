#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strongcliques/graph.hpp"

namespace strongcliques {

// 3-CNF instance. Literals are signed 1-based variable indices (+i for x_i,
// -i for its negation). Clauses hold exactly three distinct literals and
// never a complementary pair (assumption (i), enforced).
struct SatInstance {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    // Every literal occurs in at least one clause (assumption (ii)).
    bool assumption_ii() const;
    // For every variable some clause avoids both of its literals
    // (assumption (iii)).
    bool assumption_iii() const;
};

// Validates ranges, distinctness and assumption (i); normalizes clause
// literal order.
SatInstance make_sat_instance(int num_vars,
                              const std::vector<std::array<int, 3>>& clauses);

struct GadgetGraph {
    enum class Variant { G, GPrime };
    Graph graph;
    VertexSet clause_clique;           // the clique C of clause vertices
    std::vector<Edge> literal_pairs;   // (x_i, not x_i) vertex pairs
    Variant variant;

    int literal_vertex(int literal) const;  // vertex id of a literal
};

// The reduction graph G(X,C): clause vertices form a clique, each literal is
// adjacent to its negation, and a clause vertex sees exactly the literals it
// contains. Vertex layout: clauses first, then literal pairs.
GadgetGraph sat_gadget(const SatInstance& phi);

// The extended graph G' with four extra vertices u_i, v_i, ~u_i, ~v_i per
// variable wired to the literal pair; requires assumptions (i)-(iii).
// Layout: clauses, literal pairs, then the per-variable quadruples.
GadgetGraph sat_gadget_prime(const SatInstance& phi);

// Sidecar label map, one line per vertex: "vertex_id role name".
std::string gadget_labels(const GadgetGraph& gg);

// Deterministic random instance satisfying assumption (i) by construction
// and (ii)/(iii) when requested; throws after a bounded number of retries.
SatInstance random_3sat(int num_vars, int num_clauses, uint64_t seed,
                        bool enforce_ii = false, bool enforce_iii = false);

struct SatResult {
    bool satisfiable;
    std::optional<std::vector<bool>> assignment;  // indexed by variable-1
};
// Exhaustive satisfiability check; rejects instances with more than 24
// variables.
SatResult sat_bruteforce(const SatInstance& phi);

// DIMACS CNF with all clauses of width three.
SatInstance parse_dimacs_cnf(const std::string& text);
std::string to_dimacs(const SatInstance& phi);

}  // namespace strongcliques
