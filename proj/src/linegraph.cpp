#include "strongcliques/linegraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "strongcliques/oracle.hpp"

namespace strongcliques {

RootGraphMap RootGraphMap::checked(Graph root, std::vector<Edge> to_edge,
                                   const Graph& g) {
    if (int(to_edge.size()) != g.n())
        throw std::logic_error("root map: wrong number of edge images");
    for (int v = 0; v < root.n(); ++v)
        if (root.degree(v) == 0)
            throw std::logic_error("root map: root has an isolated vertex");
    std::map<Edge, int> seen;
    for (int v = 0; v < g.n(); ++v) {
        Edge e = to_edge[v];
        if (root.edge_index(e.first, e.second) < 0)
            throw std::logic_error("root map: image is not a root edge");
        if (!seen.emplace(e, v).second)
            throw std::logic_error("root map: edge image repeated");
    }
    if (root.m() != g.n())
        throw std::logic_error("root map: root edge count mismatch");
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            auto [a, b] = to_edge[u];
            auto [c, d] = to_edge[v];
            bool share = a == c || a == d || b == c || b == d;
            if (share != g.adjacent(u, v))
                throw std::logic_error("root map: adjacency not preserved");
        }
    return {std::move(root), std::move(to_edge)};
}

int RootGraphMap::vertex_of_edge(const Edge& e) const {
    Edge key = make_edge(e.first, e.second);
    for (int v = 0; v < int(to_edge.size()); ++v)
        if (to_edge[v] == key) return v;
    return -1;
}

namespace {

// Krausz partition state for one connected component (vertex ids are local).
struct KrauszSearch {
    const Graph& g;
    std::vector<int> clique_count;        // parts containing each vertex
    std::vector<std::vector<int>> parts;  // chosen cliques (vertex lists)
    std::vector<bool> edge_used;          // aligned with g.edges()

    explicit KrauszSearch(const Graph& graph)
        : g(graph), clique_count(graph.n(), 0), edge_used(graph.m(), false) {}

    bool all_edges_used() const {
        return std::all_of(edge_used.begin(), edge_used.end(),
                           [](bool b) { return b; });
    }

    int first_unused_edge() const {
        for (int i = 0; i < g.m(); ++i)
            if (!edge_used[i]) return i;
        return -1;
    }

    void place(const std::vector<int>& clique) {
        parts.push_back(clique);
        for (int v : clique) ++clique_count[v];
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                edge_used[g.edge_index(clique[i], clique[j])] = true;
    }

    void unplace() {
        const auto& clique = parts.back();
        for (int v : clique) --clique_count[v];
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                edge_used[g.edge_index(clique[i], clique[j])] = false;
        parts.pop_back();
    }

    // Collect every clique containing edge (u,v) whose internal edges are all
    // unused and whose members still have a free slot. Largest first.
    void candidate_cliques(int u, int v, std::vector<std::vector<int>>& out) {
        std::vector<int> pool;
        Bitset common = g.adj(u) & g.adj(v);
        common.for_each([&](int w) {
            if (clique_count[w] < 2 && !edge_used[g.edge_index(u, w)] &&
                !edge_used[g.edge_index(v, w)])
                pool.push_back(w);
        });
        std::vector<int> current{u, v};
        grow(pool, 0, current, out);
        std::stable_sort(out.begin(), out.end(),
                         [](const auto& a, const auto& b) {
                             return a.size() > b.size();
                         });
    }

    void grow(const std::vector<int>& pool, size_t from, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
        {
            std::vector<int> sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(std::move(sorted));
        }
        for (size_t i = from; i < pool.size(); ++i) {
            int w = pool[i];
            bool ok = true;
            for (size_t j = 2; j < cur.size() && ok; ++j) {
                int x = cur[j];
                if (!g.adjacent(w, x) || edge_used[g.edge_index(w, x)]) ok = false;
            }
            if (!ok) continue;
            cur.push_back(w);
            grow(pool, i + 1, cur, out);
            cur.pop_back();
        }
    }

    bool search() {
        int e = first_unused_edge();
        if (e < 0) return true;
        auto [u, v] = g.edges()[e];
        if (clique_count[u] >= 2 || clique_count[v] >= 2) return false;
        std::vector<std::vector<int>> candidates;
        candidate_cliques(u, v, candidates);
        for (const auto& clique : candidates) {
            place(clique);
            if (search()) return true;
            unplace();
        }
        return false;
    }
};

struct ComponentRoot {
    Graph root;
    std::vector<Edge> to_edge;  // per local vertex of the component
};

// Root of one connected component, or nullopt when it is not a line graph.
std::optional<ComponentRoot> component_root(const Graph& comp) {
    if (comp.n() == 1)  // isolated vertex of G: a K2 component of the root
        return ComponentRoot{Graph::build(2, {{0, 1}}), {{0, 1}}};
    if (comp.n() == 3 && comp.m() == 3) {
        // K3: both the triangle and the claw are roots; the claw is canonical.
        Graph claw = Graph::build(4, {{0, 1}, {0, 2}, {0, 3}});
        return ComponentRoot{claw, {{0, 1}, {0, 2}, {0, 3}}};
    }
    KrauszSearch search(comp);
    if (!search.search()) return std::nullopt;
    // Root vertices: one per part, plus a private vertex for every graph
    // vertex lying in fewer than two parts.
    int next_id = int(search.parts.size());
    std::vector<std::vector<int>> parts_of(comp.n());
    for (size_t p = 0; p < search.parts.size(); ++p)
        for (int v : search.parts[p]) parts_of[v].push_back(int(p));
    std::vector<Edge> to_edge(comp.n());
    std::vector<Edge> root_edges;
    for (int v = 0; v < comp.n(); ++v) {
        auto& ps = parts_of[v];
        int a, b;
        if (ps.size() == 2) {
            a = ps[0];
            b = ps[1];
        } else if (ps.size() == 1) {
            a = ps[0];
            b = next_id++;
        } else {
            return std::nullopt;  // cannot happen on a connected component
        }
        to_edge[v] = make_edge(a, b);
        root_edges.push_back(to_edge[v]);
    }
    return ComponentRoot{Graph::build(next_id, root_edges), to_edge};
}

bool is_line_graph_component(const Graph& comp) {
    return component_root(comp).has_value();
}

// Smallest induced subgraph of `comp` that is not a line graph; every
// non-line graph contains one on at most six vertices.
VertexSet find_obstruction(const Graph& comp, const VertexSet& comp_vertices) {
    // Induced claw first: a vertex with three pairwise non-adjacent neighbors.
    for (int v = 0; v < comp.n(); ++v) {
        auto nb = comp.adj(v).to_vector();
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (comp.adjacent(nb[i], nb[j])) continue;
                for (size_t k = j + 1; k < nb.size(); ++k) {
                    if (comp.adjacent(nb[i], nb[k]) || comp.adjacent(nb[j], nb[k]))
                        continue;
                    VertexSet w{comp_vertices[v], comp_vertices[nb[i]],
                                comp_vertices[nb[j]], comp_vertices[nb[k]]};
                    std::sort(w.begin(), w.end());
                    return w;
                }
            }
    }
    // Otherwise scan small vertex subsets for a minimal non-line subgraph.
    std::vector<int> idx(comp.n());
    for (int i = 0; i < comp.n(); ++i) idx[i] = i;
    for (int size = 4; size <= std::min(6, comp.n()); ++size) {
        std::vector<int> pick(size);
        // simple k-subset enumeration
        std::function<VertexSet(int, int)> rec = [&](int start,
                                                     int depth) -> VertexSet {
            if (depth == size) {
                VertexSet local(pick.begin(), pick.end());
                if (!is_line_graph_component(comp.induced(local))) {
                    VertexSet w;
                    for (int x : local) w.push_back(comp_vertices[x]);
                    return w;
                }
                return {};
            }
            for (int i = start; i < comp.n(); ++i) {
                pick[depth] = i;
                VertexSet got = rec(i + 1, depth + 1);
                if (!got.empty()) return got;
            }
            return {};
        };
        VertexSet got = rec(0, 0);
        if (!got.empty()) return got;
    }
    return comp_vertices;  // unreachable for genuine non-line graphs
}

}  // namespace

LineRecognition recognize_line_graph(const Graph& g) {
    auto comps = connected_components(g);
    Graph root_acc = Graph::build(0, {});
    std::vector<Edge> to_edge(g.n());
    std::vector<Edge> all_root_edges;
    int offset = 0;
    for (const auto& comp_vertices : comps) {
        Graph comp = g.induced(comp_vertices);
        auto local = component_root(comp);
        if (!local) {
            LineRecognition fail;
            fail.obstruction = find_obstruction(comp, comp_vertices);
            return fail;
        }
        for (size_t i = 0; i < comp_vertices.size(); ++i) {
            Edge e = local->to_edge[i];
            to_edge[comp_vertices[i]] = {e.first + offset, e.second + offset};
        }
        for (auto [u, v] : local->root.edges())
            all_root_edges.push_back({u + offset, v + offset});
        offset += local->root.n();
    }
    Graph root = Graph::build(offset, all_root_edges);
    LineRecognition ok;
    ok.root = RootGraphMap::checked(std::move(root), std::move(to_edge), g);
    return ok;
}

EdgeFamilies edge_families(const Graph& h) {
    for (int v = 0; v < h.n(); ++v)
        if (h.degree(v) == 0)
            throw std::invalid_argument("edge_families: isolated vertex " +
                                        std::to_string(v));
    EdgeFamilies out;
    for (const auto& t : all_triangles(h)) {
        std::vector<int> ids{h.edge_index(t[0], t[1]), h.edge_index(t[0], t[2]),
                             h.edge_index(t[1], t[2])};
        std::sort(ids.begin(), ids.end());
        out.triangles.push_back(ids);
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    out.stars.resize(h.n());
    for (int v = 0; v < h.n(); ++v) {
        h.adj(v).for_each(
            [&](int u) { out.stars[v].push_back(h.edge_index(u, v)); });
        std::sort(out.stars[v].begin(), out.stars[v].end());
    }
    // Inclusion-maximal members of triangles + stars.
    std::vector<EdgeFamilies::Member> members;
    for (size_t i = 0; i < out.triangles.size(); ++i)
        members.push_back({out.triangles[i], EdgeFamilies::Kind::Triangle, int(i)});
    for (int v = 0; v < h.n(); ++v)
        members.push_back({out.stars[v], EdgeFamilies::Kind::Star, v});
    auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
        return std::includes(big.begin(), big.end(), small.begin(), small.end());
    };
    for (const auto& m : members) {
        bool maximal = true;
        for (const auto& other : members) {
            if (&m == &other) continue;
            if (m.edge_ids == other.edge_ids) continue;  // deduped below
            if (contains(other.edge_ids, m.edge_ids)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.maximal.push_back(m);
    }
    std::sort(out.maximal.begin(), out.maximal.end(),
              [](const auto& a, const auto& b) {
                  return std::tie(a.edge_ids, a.kind, a.anchor) <
                         std::tie(b.edge_ids, b.kind, b.anchor);
              });
    // Equal stars can appear for a K2 component; keep each edge set once.
    out.maximal.erase(std::unique(out.maximal.begin(), out.maximal.end(),
                                  [](const auto& a, const auto& b) {
                                      return a.edge_ids == b.edge_ids;
                                  }),
                      out.maximal.end());
    return out;
}

TranslatedClique translate_clique(const RootGraphMap& map, const VertexSet& c) {
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) {
            auto [a, b] = map.to_edge[c[i]];
            auto [x, y] = map.to_edge[c[j]];
            bool share = a == x || a == y || b == x || b == y;
            if (!share)
                throw std::invalid_argument(
                    "translate_clique: vertices " + std::to_string(c[i]) + " and " +
                    std::to_string(c[j]) + " are non-adjacent");
        }
    TranslatedClique out;
    for (int v : c) out.edges.push_back(map.to_edge[v]);
    if (c.empty()) {
        out.shape = CliqueShape::SubStar;
        return out;
    }
    // Common endpoint => sub-star; otherwise three edges forming a triangle.
    for (int cand : {out.edges[0].first, out.edges[0].second}) {
        bool common = true;
        for (const auto& e : out.edges)
            if (e.first != cand && e.second != cand) {
                common = false;
                break;
            }
        if (common) {
            out.shape = CliqueShape::SubStar;
            out.star_vertex = cand;
            return out;
        }
    }
    if (out.edges.size() == 3) {
        std::vector<int> vs;
        for (const auto& e : out.edges) {
            vs.push_back(e.first);
            vs.push_back(e.second);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (vs.size() == 3) {
            out.shape = CliqueShape::Triangle;
            return out;
        }
    }
    out.shape = CliqueShape::Invalid;  // pairwise-intersecting but neither form
    return out;
}

}  // namespace strongcliques
