#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strongcliques/graph.hpp"
#include "strongcliques/linegraph.hpp"

namespace strongcliques {

enum class Problem {
    StrongClique,
    Existence,
    VertexCover,
    EdgeCover,
    Partition,
    PartitionExistence,
    Extension,
};

enum class Method {
    Oracle,
    C4Free,
    LineGraph,
    CoLine,
    BoundedOmega,
    Subcubic,
    Alpha2,
    CubicClassification,
};

std::string to_string(Problem p);
std::string to_string(Method m);
Problem problem_from_string(const std::string& name);

enum class CertKind {
    StrongClique,
    DominatingIndependentSet,  // a maximal independent set disjoint from C
    Partition,
    Matching,  // pairs, e.g. the perfect matching of the derived graph
};

struct Certificate {
    CertKind kind;
    std::vector<VertexSet> sets;
};

struct Verdict {
    Problem problem;
    bool answer;
    Method method;
    std::optional<Certificate> certificate;
};

// Raised when the dispatcher would have to fall back to the exponential
// oracle on an instance larger than the configured cap.
struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strong Clique Extension per graph class. Each solver validates its class
// precondition and the clique input.

// C4-free graphs: a clique is strong iff it is simplicial, so C extends iff
// some closed neighborhood N[v] that is a clique contains it.
Verdict sce_c4free(const Graph& g, const VertexSet& c);

// Line graphs: a candidate member of M_H containing the translated clique is
// strong iff the matching test of its shape (triangle or star) fails in H.
Verdict sce_linegraph(const Graph& g, const VertexSet& c);
Verdict sce_linegraph_with_root(const Graph& g, const RootGraphMap& root,
                                const VertexSet& c);

// Complements of line graphs: reduce to one maximum-weight matching on the
// pruned root graph, accepting iff the optimum hits |M_H|.
Verdict sce_coline(const Graph& g, const VertexSet& c);
Verdict sce_coline_with_root(const Graph& g, const RootGraphMap& co_root,
                             const VertexSet& c);

// Bounded clique number: a maximal clique is strong iff no independent subset
// of its neighborhood with at most k vertices dominates it.
Verdict sce_bounded_omega(const Graph& g, const VertexSet& c, int k);

// Localizability for subcubic graphs: strong triangles plus a perfect
// matching of the derived strong-pair graph, with the K4 and co(P2+P3)
// special cases first.
Verdict localizable_subcubic(const Graph& g);

// Localizability for graphs of independence number two.
Verdict localizable_alpha2(const Graph& g);

struct CubicClassification {
    enum class Tag { K33, K4, CoC6, Fn, NotLocalizable };
    Tag tag;
    int fn_param = 0;  // n of the recognized F_n
    // Vertex map onto the named family member when tagged.
    std::optional<std::vector<int>> isomorphism;
    // A vertex contained in no strong clique when NotLocalizable.
    std::optional<int> uncovered_vertex;
};
std::string to_string(CubicClassification::Tag tag);

// Classification of connected cubic graphs.
CubicClassification classify_cubic(const Graph& g);

struct SolveOptions {
    int omega_cap = 6;    // bounded-omega routing threshold
    int oracle_cap = 20;  // refuse oracle fallback above this many vertices
};

struct SolveInput {
    std::optional<VertexSet> clique;                 // StrongClique / Extension
    std::optional<std::vector<VertexSet>> partition;  // Partition
};

// Routes to the cheapest applicable engine:
// C4-free -> line graph -> complement of line graph -> bounded omega ->
// oracle; PartitionExistence instead tries subcubic -> alpha=2 -> oracle.
Verdict solve(Problem problem, const Graph& g, const SolveInput& input = {},
              const SolveOptions& options = {});

// Re-checks a verdict's certificate against the oracle definitions.
// Returns true when the certificate (if any) is valid for (problem, g).
bool certificate_valid(const Graph& g, const Verdict& v,
                       const SolveInput& input = {});

}  // namespace strongcliques
