#pragma once

#include <optional>
#include <vector>

#include "strongcliques/graph.hpp"

namespace strongcliques {

// Root graph H plus the bijection from vertices of the recognized graph G to
// edges of H witnessing G = L(H). Verified on construction.
struct RootGraphMap {
    Graph root;                  // no isolated vertices
    std::vector<Edge> to_edge;   // to_edge[v in G] = edge of root

    static RootGraphMap checked(Graph root, std::vector<Edge> to_edge,
                                const Graph& g);
    // Inverse lookup: vertex of G whose root edge is e, or -1.
    int vertex_of_edge(const Edge& e) const;
};

struct LineRecognition {
    std::optional<RootGraphMap> root;
    // Vertex set of a small induced subgraph that is not a line graph
    // (an induced claw when one exists); only set on failure.
    VertexSet obstruction;

    bool recognized() const { return root.has_value(); }
};

// Krausz-partition search: covers the edges of each component by cliques with
// every vertex in at most two of them, then reads the root off the partition.
// The canonical root of a K3 component is the claw.
LineRecognition recognize_line_graph(const Graph& g);

// The star/triangle edge families of a graph without isolated vertices.
// Edge sets are sorted lists of indices into h.edges().
struct EdgeFamilies {
    enum class Kind { Star, Triangle };
    struct Member {
        std::vector<int> edge_ids;
        Kind kind;
        int anchor;  // star center, or index into `triangles`
    };
    std::vector<std::vector<int>> triangles;  // edge-id triples, lexicographic
    std::vector<std::vector<int>> stars;      // stars[v] = edge ids at v
    std::vector<Member> maximal;              // inclusion-maximal members, lex
};
EdgeFamilies edge_families(const Graph& h);

enum class CliqueShape { SubStar, Triangle, Invalid };

struct TranslatedClique {
    std::vector<Edge> edges;  // root edges of the clique's vertices
    CliqueShape shape;
    std::optional<int> star_vertex;  // common root vertex for SubStar
};

// Maps a clique of G into the root graph and classifies it as a sub-star or
// a triangle. Throws when c is not a clique.
TranslatedClique translate_clique(const RootGraphMap& map, const VertexSet& c);

}  // namespace strongcliques
