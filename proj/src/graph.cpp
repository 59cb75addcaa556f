#include "strongcliques/graph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace strongcliques {

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range for n=" +
                                        std::to_string(n));
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    for (int u = 0; u < n; ++u)
        g.adj_[u].for_each([&](int v) {
            if (u < v) g.edges_.push_back({u, v});
        });
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

int Graph::edge_index(int u, int v) const {
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return int(it - edges_.begin());
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (int(labels.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    labels_ = std::move(labels);
}

Graph Graph::induced(const VertexSet& verts) const {
    std::vector<int> new_id(n_, -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        int v = verts[i];
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
        new_id[v] = int(i);
    }
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (new_id[u] >= 0 && new_id[v] >= 0)
            es.push_back(make_edge(new_id[u], new_id[v]));
    Graph g = build(int(verts.size()), es);
    if (has_labels()) {
        std::vector<std::string> labels(verts.size());
        for (size_t i = 0; i < verts.size(); ++i) labels[i] = labels_[verts[i]];
        g.set_labels(std::move(labels));
    }
    return g;
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) es.push_back({u, v});
    Graph out = Graph::build(g.n(), es);
    if (g.has_labels()) out.set_labels(g.labels());
    return out;
}

LineGraphResult line_graph(const Graph& g) {
    const auto& es = g.edges();
    std::vector<Edge> line_edges;
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                line_edges.push_back({int(i), int(j)});
        }
    return {Graph::build(int(es.size()), line_edges), es};
}

Graph complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph::build(n, es);
}

Graph path(int n) {
    if (n < 0) throw std::invalid_argument("path: n must be nonnegative");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph::build(n, es);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back(make_edge(v, (v + 1) % n));
    return Graph::build(n, es);
}

Graph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("complete_bipartite: negative part size");
    std::vector<Edge> es;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) es.push_back({u, a + v});
    return Graph::build(a + b, es);
}

Graph diamond() {
    return Graph::build(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Graph co_p2_plus_p3() {
    // P2 on {0,1}, P3 on {2,3,4} (2-3-4), complemented.
    Graph base = Graph::build(5, {{0, 1}, {2, 3}, {3, 4}});
    return complement(base);
}

Graph co_c6() { return complement(cycle(6)); }

namespace {

// One gadget: triangle {x,y,z}, triangle {x',y',z'}, rungs y-y' and z-z'.
// Vertex layout per copy i: x=6i, x'=6i+1, y=6i+2, y'=6i+3, z=6i+4, z'=6i+5.
void append_f_gadget(std::vector<Edge>& es, int base) {
    int x = base, xp = base + 1, y = base + 2, yp = base + 3, z = base + 4,
        zp = base + 5;
    for (Edge e : {make_edge(x, y), make_edge(x, z), make_edge(y, z),
                   make_edge(xp, yp), make_edge(xp, zp), make_edge(yp, zp),
                   make_edge(y, yp), make_edge(z, zp)})
        es.push_back(e);
}

}  // namespace

Graph f_gadget() {
    std::vector<Edge> es;
    append_f_gadget(es, 0);
    return Graph::build(6, es);
}

Graph f_n(int n) {
    if (n < 2) throw std::invalid_argument("f_n: n must be at least 2");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) append_f_gadget(es, 6 * i);
    // Cycle edges x_i ~ x'_{i+1}; for n=2 the two parallel cycle edges are
    // realized as x_0~x'_1 and x_1~x'_0.
    for (int i = 0; i < n; ++i)
        es.push_back(make_edge(6 * i, 6 * ((i + 1) % n) + 1));
    return Graph::build(6 * n, es);
}

Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back(make_edge(i, (i + 1) % 5));          // outer cycle
        es.push_back(make_edge(5 + i, 5 + (i + 2) % 5));  // inner pentagram
        es.push_back(make_edge(i, 5 + i));                // spokes
    }
    return Graph::build(10, es);
}

Graph named(const NamedFamily& spec) {
    switch (spec.family) {
        case Family::Complete: return complete(spec.p1);
        case Family::Path: return path(spec.p1);
        case Family::Cycle: return cycle(spec.p1);
        case Family::CompleteBipartite:
            return complete_bipartite(spec.p1, spec.p2);
        case Family::Diamond: return diamond();
        case Family::CoP2PlusP3: return co_p2_plus_p3();
        case Family::CoC6: return co_c6();
        case Family::FGadget: return f_gadget();
        case Family::Fn: return f_n(spec.p1);
        case Family::Petersen: return petersen();
    }
    throw std::invalid_argument("unknown graph family");
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = int(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out[id].push_back(u);
            g.adj(u).for_each([&](int v) {
                if (comp[v] < 0) {
                    comp[v] = id;
                    stack.push_back(v);
                }
            });
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

namespace {

// Grows induced paths P = v0..vk.  A candidate u adjacent to vk and to no
// interior vertex closes an induced cycle when it is also adjacent to v0;
// otherwise it extends the path.  v0 is kept minimal in the cycle so each
// cycle is found once.
bool long_cycle_dfs(const Graph& g, std::vector<int>& path, Bitset& interior_adj,
                    std::vector<int>& out) {
    int last = path.back();
    int v0 = path[0];
    for (int u = v0 + 1; u < g.n(); ++u) {
        if (!g.adjacent(last, u)) continue;
        if (interior_adj.test(u)) continue;
        bool on_path = false;
        for (int w : path)
            if (w == u) { on_path = true; break; }
        if (on_path) continue;
        if (g.adjacent(v0, u)) {
            if (int(path.size()) + 1 >= 5) {
                out = path;
                out.push_back(u);
                return true;
            }
            continue;  // would become a chord if the path grew past u
        }
        path.push_back(u);
        Bitset saved = interior_adj;
        interior_adj |= g.adj(last);
        if (long_cycle_dfs(g, path, interior_adj, out)) return true;
        interior_adj = saved;
        path.pop_back();
    }
    return false;
}

}  // namespace

VertexSet find_long_induced_cycle(const Graph& g) {
    std::vector<int> out;
    for (int v0 = 0; v0 < g.n(); ++v0) {
        for (int v1 = v0 + 1; v1 < g.n(); ++v1) {
            if (!g.adjacent(v0, v1)) continue;
            std::vector<int> path{v0, v1};
            // Interior-adjacency mask: vertices adjacent to some path vertex
            // other than the last one (v0 tracked separately).
            Bitset interior(g.n());
            if (long_cycle_dfs(g, path, interior, out)) return out;
        }
    }
    return {};
}

WeaklyChordalReport is_weakly_chordal(const Graph& g) {
    VertexSet cyc = find_long_induced_cycle(g);
    if (!cyc.empty()) return {false, cyc, false};
    cyc = find_long_induced_cycle(complement(g));
    if (!cyc.empty()) return {false, cyc, true};
    return {true, {}, false};
}

DegreeProfile degree_profile(const Graph& g) {
    int dmin = 0, dmax = 0;
    if (g.n() > 0) {
        dmin = g.n();
        for (int v = 0; v < g.n(); ++v) {
            dmin = std::min(dmin, g.degree(v));
            dmax = std::max(dmax, g.degree(v));
        }
    }
    bool regular = dmin == dmax;
    return {dmin, dmax, regular, regular && dmin == 3, dmax <= 3};
}

std::vector<std::array<int, 3>> all_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.adjacent(u, v)) continue;
            Bitset common = g.adj(u) & g.adj(v);
            common.for_each([&](int w) {
                if (w > v) out.push_back({u, v, w});
            });
        }
    return out;
}

std::optional<std::array<int, 4>> find_induced_c4(const Graph& g) {
    // u,v non-adjacent with two non-adjacent common neighbors form an
    // induced C4.
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.adjacent(u, v)) continue;
            Bitset common = g.adj(u) & g.adj(v);
            auto cs = common.to_vector();
            for (size_t i = 0; i < cs.size(); ++i)
                for (size_t j = i + 1; j < cs.size(); ++j)
                    if (!g.adjacent(cs[i], cs[j]))
                        return std::array<int, 4>{u, cs[i], v, cs[j]};
        }
    return std::nullopt;
}

bool has_induced_c4(const Graph& g) { return find_induced_c4(g).has_value(); }

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_edge_list(std::istream& in) {
    std::string line;
    long n = -1, m = -1;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m)) {
                std::string word;
                std::istringstream probe(line);
                if (probe >> word)
                    throw std::invalid_argument("edge list: bad header at line " +
                                                std::to_string(lineno));
                n = -1;  // blank line before header
                continue;
            }
            if (n < 0 || m < 0)
                throw std::invalid_argument("edge list: negative header values");
            continue;
        }
        long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v))
            throw std::invalid_argument("edge list: incomplete edge at line " +
                                        std::to_string(lineno));
        edges.push_back({int(u), int(v)});
    }
    if (n < 0) throw std::invalid_argument("edge list: missing header");
    if (long(edges.size()) != m)
        throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                    " edges, found " + std::to_string(edges.size()));
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("edge list: self-loop at vertex " +
                                                std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    return Graph::build(int(n), edges);
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

}  // namespace strongcliques
