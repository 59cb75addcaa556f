#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strongcliques/bitset.hpp"

namespace strongcliques {

// Endpoints are normalized to first < second everywhere in this library.
using Edge = std::pair<int, int>;
// Sorted, duplicate-free vertex ids of a host graph.
using VertexSet = std::vector<int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Simple undirected graph over dense vertex ids 0..n-1, immutable after
// build(). Adjacency is kept both as per-vertex bitsets and as a sorted edge
// list.
class Graph {
public:
    Graph() = default;

    // Rejects out-of-range endpoints and self-loops; duplicate edges collapse.
    static Graph build(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    int m() const { return int(edges_.size()); }

    bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }
    int degree(int v) const { return adj_[v].count(); }
    const Bitset& adj(int v) const { return adj_[v]; }
    Bitset closed(int v) const {
        Bitset b = adj_[v];
        b.set(v);
        return b;
    }

    const std::vector<Edge>& edges() const { return edges_; }
    // Index of (u,v) in edges(), or -1.
    int edge_index(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    // Subgraph induced by `verts` (sorted, valid ids); new ids follow the
    // order of `verts`. Labels are carried over.
    Graph induced(const VertexSet& verts) const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

Graph complement(const Graph& g);

// Line graph plus the record of which root edge each new vertex came from.
struct LineGraphResult {
    Graph graph;
    std::vector<Edge> root_edge_of_vertex;  // indexed by line-graph vertex
};
LineGraphResult line_graph(const Graph& g);

enum class Family {
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    Diamond,
    CoP2PlusP3,
    CoC6,
    FGadget,
    Fn,
    Petersen,
};

struct NamedFamily {
    Family family;
    int p1 = 0;
    int p2 = 0;
};

Graph named(const NamedFamily& spec);

// Convenience constructors.
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);
Graph diamond();
Graph co_p2_plus_p3();
Graph co_c6();
Graph f_gadget();
Graph f_n(int n);
Graph petersen();

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct WeaklyChordalReport {
    bool weakly_chordal;
    VertexSet witness_cycle;   // empty when weakly chordal
    bool witness_in_complement = false;
};
// True iff neither g nor its complement has an induced cycle of length >= 5.
// Exponential-ish search; intended for small graphs.
WeaklyChordalReport is_weakly_chordal(const Graph& g);

// Induced cycle of length >= 5 in g itself, empty if none.
VertexSet find_long_induced_cycle(const Graph& g);

struct DegreeProfile {
    int min_degree;
    int max_degree;
    bool is_regular;
    bool is_cubic;
    bool is_subcubic;
};
DegreeProfile degree_profile(const Graph& g);

// All triangles as sorted vertex triples, in lexicographic order.
std::vector<std::array<int, 3>> all_triangles(const Graph& g);

bool has_induced_c4(const Graph& g);
std::optional<std::array<int, 4>> find_induced_c4(const Graph& g);

// Edge-list text format: first line "n m", then m lines "u v" (0-based),
// '#' starts a comment line. write_edge_list output is canonical and
// round-trips bit-exactly through parse_edge_list.
std::string write_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(std::istream& in);

}  // namespace strongcliques
