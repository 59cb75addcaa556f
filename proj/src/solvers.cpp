#include "strongcliques/solvers.hpp"

#include <algorithm>
#include <map>

#include "strongcliques/isomorphism.hpp"
#include "strongcliques/matching.hpp"
#include "strongcliques/oracle.hpp"

namespace strongcliques {

std::string to_string(Problem p) {
    switch (p) {
        case Problem::StrongClique: return "strong_clique";
        case Problem::Existence: return "existence";
        case Problem::VertexCover: return "vertex_cover";
        case Problem::EdgeCover: return "edge_cover";
        case Problem::Partition: return "partition";
        case Problem::PartitionExistence: return "partition_existence";
        case Problem::Extension: return "extension";
    }
    return "?";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Oracle: return "oracle";
        case Method::C4Free: return "c4free";
        case Method::LineGraph: return "linegraph";
        case Method::CoLine: return "coline";
        case Method::BoundedOmega: return "bounded_omega";
        case Method::Subcubic: return "subcubic";
        case Method::Alpha2: return "alpha2";
        case Method::CubicClassification: return "cubic_classification";
    }
    return "?";
}

Problem problem_from_string(const std::string& name) {
    for (Problem p : {Problem::StrongClique, Problem::Existence,
                      Problem::VertexCover, Problem::EdgeCover, Problem::Partition,
                      Problem::PartitionExistence, Problem::Extension})
        if (to_string(p) == name) return p;
    throw std::invalid_argument("unknown problem: " + name);
}

std::string to_string(CubicClassification::Tag tag) {
    switch (tag) {
        case CubicClassification::Tag::K33: return "K33";
        case CubicClassification::Tag::K4: return "K4";
        case CubicClassification::Tag::CoC6: return "coC6";
        case CubicClassification::Tag::Fn: return "Fn";
        case CubicClassification::Tag::NotLocalizable: return "not_localizable";
    }
    return "?";
}

namespace {

bool is_maximal_clique(const Graph& g, const VertexSet& c) {
    if (c.empty()) return g.n() == 0;
    Bitset common = g.closed(c[0]);
    for (int v : c) common &= g.closed(v);
    return common.count() == int(c.size());
}

// Greedy extension of an independent set to a maximal independent set of g
// avoiding the vertices of `avoid`.
VertexSet extend_to_mis_avoiding(const Graph& g, VertexSet seed,
                                 const VertexSet& avoid) {
    Bitset members = Bitset::of(g.n(), seed);
    Bitset blocked = Bitset::of(g.n(), avoid);
    for (int v : seed) blocked |= g.adj(v);
    for (int v = 0; v < g.n(); ++v) {
        if (members.test(v) || blocked.test(v)) continue;
        members.set(v);
        blocked |= g.adj(v);
    }
    return members.to_vector();
}

// Smallest-first search for an independent subset of N(c) with at most
// `bound` vertices dominating the clique c (each chosen vertex privately
// dominates the first still-undominated clique vertex).
bool dominating_subset_search(const Graph& g, const VertexSet& c,
                              const Bitset& neighborhood, Bitset chosen,
                              Bitset chosen_adj, int remaining, VertexSet& out) {
    int target = -1;
    for (int v : c)
        if (!g.adj(v).intersects(chosen)) {
            target = v;
            break;
        }
    if (target < 0) {
        out = chosen.to_vector();
        return true;
    }
    if (remaining == 0) return false;
    Bitset candidates = g.adj(target) & neighborhood;
    candidates -= chosen_adj;
    candidates -= chosen;
    bool found = false;
    candidates.for_each([&](int u) {
        if (found) return;
        Bitset c2 = chosen;
        c2.set(u);
        Bitset a2 = chosen_adj | g.adj(u);
        if (dominating_subset_search(g, c, neighborhood, c2, a2, remaining - 1,
                                     out))
            found = true;
    });
    return found;
}

// Independent subset of N(c), size <= bound, dominating c; nullopt if none.
// With bound >= |c| this decides strongness of a maximal clique exactly.
std::optional<VertexSet> find_dominating_independent_subset(const Graph& g,
                                                            const VertexSet& c,
                                                            int bound) {
    Bitset neighborhood(g.n());
    for (int v : c) neighborhood |= g.adj(v);
    for (int v : c) neighborhood.reset(v);
    VertexSet out;
    if (dominating_subset_search(g, c, neighborhood, Bitset(g.n()), Bitset(g.n()),
                                 bound, out))
        return out;
    return std::nullopt;
}

Verdict extension_verdict(bool answer, Method method,
                          std::optional<Certificate> cert = std::nullopt) {
    return {Problem::Extension, answer, method, std::move(cert)};
}

Certificate strong_clique_cert(VertexSet s) {
    return {CertKind::StrongClique, {std::move(s)}};
}

}  // namespace

Verdict sce_c4free(const Graph& g, const VertexSet& c) {
    if (auto c4 = find_induced_c4(g)) {
        auto [a, b, x, y] = *c4;
        throw std::invalid_argument("graph contains an induced C4 on vertices " +
                                    std::to_string(a) + "," + std::to_string(b) +
                                    "," + std::to_string(x) + "," +
                                    std::to_string(y));
    }
    require_clique(g, c, /*allow_empty=*/true);
    Bitset cb = Bitset::of(g.n(), c);
    // Strong cliques of a C4-free graph are the simplicial cliques N[v].
    for (int v = 0; v < g.n(); ++v) {
        Bitset closed = g.closed(v);
        if (!cb.is_subset_of(closed)) continue;
        bool simplicial = true;
        auto members = closed.to_vector();
        for (size_t i = 0; i < members.size() && simplicial; ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (!g.adjacent(members[i], members[j])) {
                    simplicial = false;
                    break;
                }
        if (simplicial)
            return extension_verdict(true, Method::C4Free,
                                     strong_clique_cert(members));
    }
    return extension_verdict(false, Method::C4Free);
}

namespace {

// A member of M_H is strong in L(H) iff no maximal matching of H avoids it:
// for a triangle T that means H - E(T) has no matching saturating two of T's
// vertices, for a star E(v) that H - v has no matching saturating N(v).
bool member_strong_in_root(const Graph& h, const EdgeFamilies::Member& m) {
    if (m.kind == EdgeFamilies::Kind::Triangle) {
        VertexSet tv;
        std::vector<Edge> te;
        for (int id : m.edge_ids) {
            te.push_back(h.edges()[id]);
            tv.push_back(h.edges()[id].first);
            tv.push_back(h.edges()[id].second);
        }
        std::sort(tv.begin(), tv.end());
        tv.erase(std::unique(tv.begin(), tv.end()), tv.end());
        return !exists_matching_saturating(h, tv, te, 2);
    }
    int v = m.anchor;
    std::vector<Edge> star_edges;
    for (int id : m.edge_ids) star_edges.push_back(h.edges()[id]);
    return !exists_matching_saturating(h, h.adj(v).to_vector(), star_edges);
}

std::map<Edge, int> edge_to_vertex(const RootGraphMap& map) {
    std::map<Edge, int> out;
    for (int v = 0; v < int(map.to_edge.size()); ++v) out[map.to_edge[v]] = v;
    return out;
}

VertexSet member_as_vertices(const RootGraphMap& root,
                             const std::map<Edge, int>& inv,
                             const std::vector<int>& edge_ids) {
    VertexSet out;
    for (int id : edge_ids) out.push_back(inv.at(root.root.edges()[id]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Verdict sce_linegraph_with_root(const Graph& g, const RootGraphMap& root,
                                const VertexSet& c) {
    require_clique(g, c, /*allow_empty=*/true);
    const Graph& h = root.root;
    EdgeFamilies fam = edge_families(h);
    std::vector<int> required;
    for (int v : c) {
        Edge e = root.to_edge[v];
        required.push_back(h.edge_index(e.first, e.second));
    }
    std::sort(required.begin(), required.end());
    auto inv = edge_to_vertex(root);
    for (const auto& m : fam.maximal) {
        if (!std::includes(m.edge_ids.begin(), m.edge_ids.end(), required.begin(),
                           required.end()))
            continue;
        if (member_strong_in_root(h, m))
            return extension_verdict(
                true, Method::LineGraph,
                strong_clique_cert(member_as_vertices(root, inv, m.edge_ids)));
    }
    return extension_verdict(false, Method::LineGraph);
}

Verdict sce_linegraph(const Graph& g, const VertexSet& c) {
    auto rec = recognize_line_graph(g);
    if (!rec.recognized())
        throw std::invalid_argument("graph is not a line graph");
    return sce_linegraph_with_root(g, *rec.root, c);
}

Verdict sce_coline_with_root(const Graph& g, const RootGraphMap& co_root,
                             const VertexSet& c) {
    require_clique(g, c, /*allow_empty=*/true);
    const Graph& h = co_root.root;
    EdgeFamilies fam = edge_families(h);
    long long k = (long long)fam.maximal.size();
    // The clique corresponds to a matching in H.
    std::vector<Edge> ch;
    for (int v : c) ch.push_back(co_root.to_edge[v]);
    Bitset ch_vertices(h.n());
    for (auto [u, v] : ch) {
        if (ch_vertices.test(u) || ch_vertices.test(v))
            throw std::logic_error("coline: clique does not map to a matching");
        ch_vertices.set(u);
        ch_vertices.set(v);
    }
    std::sort(ch.begin(), ch.end());
    // H': drop every edge outside C_H touching a C_H edge; weight the rest by
    // how many members of M_H contain it.
    std::vector<long long> member_count(h.m(), 0);
    for (const auto& m : fam.maximal)
        for (int id : m.edge_ids) ++member_count[id];
    WeightedGraph wg{h, std::vector<long long>(h.m(), 0)};
    for (int i = 0; i < h.m(); ++i) {
        Edge e = h.edges()[i];
        bool in_ch = std::binary_search(ch.begin(), ch.end(), e);
        bool touches = ch_vertices.test(e.first) || ch_vertices.test(e.second);
        if (!in_ch && touches) continue;
        wg.edge_weight[i] = member_count[i];
    }
    auto res = max_weight_matching(wg);
    if (res.weight != k) return extension_verdict(false, Method::CoLine);
    auto inv = edge_to_vertex(co_root);
    VertexSet cert;
    for (const auto& e : res.matching.edges) cert.push_back(inv.at(e));
    std::sort(cert.begin(), cert.end());
    return extension_verdict(true, Method::CoLine,
                             strong_clique_cert(std::move(cert)));
}

Verdict sce_coline(const Graph& g, const VertexSet& c) {
    auto rec = recognize_line_graph(complement(g));
    if (!rec.recognized())
        throw std::invalid_argument("complement is not a line graph");
    return sce_coline_with_root(g, *rec.root, c);
}

Verdict sce_bounded_omega(const Graph& g, const VertexSet& c, int k) {
    if (k < 1) throw std::invalid_argument("omega bound must be positive");
    VertexSet omega_witness = maximum_clique(g);
    if (int(omega_witness.size()) > k) {
        std::string ids;
        for (int v : omega_witness) ids += (ids.empty() ? "" : ",") + std::to_string(v);
        throw std::invalid_argument("clique number exceeds " + std::to_string(k) +
                                    "; witness clique " + ids);
    }
    require_clique(g, c, /*allow_empty=*/true);
    Bitset cb = Bitset::of(g.n(), c);
    for (const auto& cand : maximal_cliques(g)) {
        if (cand.empty()) continue;
        if (!cb.is_subset_of(Bitset::of(g.n(), cand))) continue;
        int bound = std::min<int>(k, int(cand.size()));
        if (!find_dominating_independent_subset(g, cand, bound))
            return extension_verdict(true, Method::BoundedOmega,
                                     strong_clique_cert(cand));
    }
    return extension_verdict(false, Method::BoundedOmega);
}

namespace {

// Strong cliques of size <= 3 in a subcubic component, by domination tests.
struct SmallStrongCliques {
    std::vector<VertexSet> pairs;      // strong cliques of size two
    std::vector<VertexSet> triangles;  // strong cliques of size three
};

SmallStrongCliques small_strong_cliques(const Graph& g) {
    SmallStrongCliques out;
    for (auto [u, v] : g.edges()) {
        VertexSet c{u, v};
        if (is_maximal_clique(g, c) &&
            !find_dominating_independent_subset(g, c, 2))
            out.pairs.push_back(c);
    }
    for (const auto& t : all_triangles(g)) {
        VertexSet c{t[0], t[1], t[2]};
        if (is_maximal_clique(g, c) &&
            !find_dominating_independent_subset(g, c, 3))
            out.triangles.push_back(c);
    }
    return out;
}

// Localizability of one connected subcubic component; parts in local ids.
std::optional<std::vector<VertexSet>> component_localizable_subcubic(
    const Graph& comp) {
    int n = comp.n();
    if (n == 1) return std::vector<VertexSet>{{0}};
    if (n == 4 && comp.m() == 6)  // K4; its whole vertex set is strong
        return std::vector<VertexSet>{{0, 1, 2, 3}};
    SmallStrongCliques strong = small_strong_cliques(comp);
    // A strong triangle meeting another strong clique pins the graph down to
    // co(P2+P3).
    auto intersects = [](const VertexSet& a, const VertexSet& b) {
        for (int x : a)
            for (int y : b)
                if (x == y) return true;
        return false;
    };
    for (const auto& t : strong.triangles) {
        bool crossing = false;
        for (const auto& other : strong.triangles)
            if (&other != &t && intersects(t, other)) crossing = true;
        for (const auto& p : strong.pairs)
            if (intersects(t, p)) crossing = true;
        if (!crossing) continue;
        if (!are_isomorphic(comp, co_p2_plus_p3())) return std::nullopt;
        auto exact = localizable_exact(comp);  // constant-size instance
        return exact.partition;
    }
    // Strong triangles are pairwise disjoint and must all be used; the rest
    // must pair up along strong cliques of size two.
    Bitset in_triangle(n);
    for (const auto& t : strong.triangles)
        for (int v : t) in_triangle.set(v);
    std::vector<int> rest;  // vertices outside all strong triangles
    std::vector<int> local_id(n, -1);
    for (int v = 0; v < n; ++v)
        if (!in_triangle.test(v)) {
            local_id[v] = int(rest.size());
            rest.push_back(v);
        }
    std::vector<Edge> derived_edges;
    for (const auto& p : strong.pairs) {
        if (in_triangle.test(p[0]) || in_triangle.test(p[1]))
            continue;  // cannot happen once the crossing case is excluded
        derived_edges.push_back(make_edge(local_id[p[0]], local_id[p[1]]));
    }
    Graph derived = Graph::build(int(rest.size()), derived_edges);
    auto pm = has_perfect_matching(derived);
    if (!pm.exists) return std::nullopt;
    std::vector<VertexSet> parts = strong.triangles;
    for (auto [a, b] : pm.matching->edges)
        parts.push_back({std::min(rest[a], rest[b]), std::max(rest[a], rest[b])});
    std::sort(parts.begin(), parts.end());
    return parts;
}

}  // namespace

Verdict localizable_subcubic(const Graph& g) {
    auto profile = degree_profile(g);
    if (!profile.is_subcubic)
        throw std::invalid_argument("maximum degree exceeds 3");
    std::vector<VertexSet> parts;
    for (const auto& comp_vertices : connected_components(g)) {
        Graph comp = g.induced(comp_vertices);
        auto local = component_localizable_subcubic(comp);
        if (!local)
            return {Problem::PartitionExistence, false, Method::Subcubic,
                    std::nullopt};
        for (const auto& part : *local) {
            VertexSet mapped;
            for (int v : part) mapped.push_back(comp_vertices[v]);
            std::sort(mapped.begin(), mapped.end());
            parts.push_back(mapped);
        }
    }
    std::sort(parts.begin(), parts.end());
    return {Problem::PartitionExistence, true, Method::Subcubic,
            Certificate{CertKind::Partition, parts}};
}

Verdict localizable_alpha2(const Graph& g) {
    Graph co = complement(g);
    if (co.m() == 0)
        throw std::invalid_argument("independence number is not 2 (complement has no edge)");
    if (!all_triangles(co).empty())
        throw std::invalid_argument("independence number exceeds 2 (complement has a triangle)");
    bool no_isolated = true;
    for (int v = 0; v < co.n(); ++v)
        if (co.degree(v) == 0) no_isolated = false;
    // 2-color the complement.
    std::vector<int> color(co.n(), -1);
    bool bipartite = true;
    for (int s = 0; s < co.n() && bipartite; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty() && bipartite) {
            int u = stack.back();
            stack.pop_back();
            co.adj(u).for_each([&](int v) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    bipartite = false;
                }
            });
        }
    }
    bool answer = bipartite && no_isolated;
    std::optional<Certificate> cert;
    if (answer) {
        VertexSet a, b;
        for (int v = 0; v < co.n(); ++v) (color[v] == 0 ? a : b).push_back(v);
        cert = Certificate{CertKind::Partition, {a, b}};
    }
    return {Problem::PartitionExistence, answer, Method::Alpha2, cert};
}

namespace {

// F_n has one triangle per vertex; triangle pairs are joined by two rungs
// inside a gadget and single x-x' edges between consecutive gadgets.
std::optional<std::vector<int>> recognize_f_n(const Graph& g, int& out_n) {
    if (g.n() % 6 != 0) return std::nullopt;
    int k = g.n() / 6;
    if (k < 2) return std::nullopt;
    auto triangles = all_triangles(g);
    if (int(triangles.size()) != 2 * k) return std::nullopt;
    std::vector<int> triangle_of(g.n(), -1);
    for (size_t t = 0; t < triangles.size(); ++t)
        for (int v : triangles[t]) {
            if (triangle_of[v] != -1) return std::nullopt;
            triangle_of[v] = int(t);
        }
    for (int v = 0; v < g.n(); ++v)
        if (triangle_of[v] < 0) return std::nullopt;
    // Count connecting edges between triangles.
    std::map<std::pair<int, int>, std::vector<Edge>> bonds;
    for (auto [u, v] : g.edges()) {
        int tu = triangle_of[u], tv = triangle_of[v];
        if (tu == tv) continue;
        bonds[{std::min(tu, tv), std::max(tu, tv)}].push_back({u, v});
    }
    std::vector<int> double_partner(2 * k, -1), single_partner(2 * k, -1);
    for (const auto& [key, edges] : bonds) {
        auto [a, b] = key;
        if (edges.size() == 2) {
            if (double_partner[a] != -1 || double_partner[b] != -1)
                return std::nullopt;
            double_partner[a] = b;
            double_partner[b] = a;
        } else if (edges.size() == 1) {
            if (single_partner[a] != -1 || single_partner[b] != -1)
                return std::nullopt;
            single_partner[a] = b;
            single_partner[b] = a;
        } else {
            return std::nullopt;
        }
    }
    for (int t = 0; t < 2 * k; ++t)
        if (double_partner[t] < 0 || single_partner[t] < 0) return std::nullopt;
    auto single_edge_of = [&](int t) -> Edge {
        auto a = std::min(t, single_partner[t]);
        auto b = std::max(t, single_partner[t]);
        return bonds.at({a, b})[0];
    };
    // Walk gadget pairs around the cycle starting from the triangle holding
    // vertex 0, assigning x/y/z roles and building the map onto f_n(k).
    std::vector<int> mapping(g.n(), -1);
    std::vector<bool> visited(2 * k, false);
    int p = triangle_of[0];
    for (int i = 0; i < k; ++i) {
        int pp = double_partner[p];  // the primed triangle of gadget i
        if (visited[p] || visited[pp]) return std::nullopt;
        visited[p] = visited[pp] = true;
        Edge out_edge = single_edge_of(p);
        int x = triangle_of[out_edge.first] == p ? out_edge.first : out_edge.second;
        Edge in_edge = single_edge_of(pp);
        int xp = triangle_of[in_edge.first] == pp ? in_edge.first : in_edge.second;
        VertexSet prest, pprest;
        for (int v : triangles[p])
            if (v != x) prest.push_back(v);
        for (int v : triangles[pp])
            if (v != xp) pprest.push_back(v);
        if (prest.size() != 2 || pprest.size() != 2) return std::nullopt;
        int y = prest[0], z = prest[1];
        int yp = g.adjacent(y, pprest[0]) ? pprest[0] : pprest[1];
        int zp = pprest[0] == yp ? pprest[1] : pprest[0];
        if (!g.adjacent(y, yp) || !g.adjacent(z, zp)) return std::nullopt;
        int base = 6 * i;
        mapping[x] = base;
        mapping[xp] = base + 1;
        mapping[y] = base + 2;
        mapping[yp] = base + 3;
        mapping[z] = base + 4;
        mapping[zp] = base + 5;
        // next gadget: the single bond leaving p enters the next primed
        // triangle, whose double partner continues the walk
        int next_pp = single_partner[p];
        p = double_partner[next_pp];
    }
    for (bool v : visited)
        if (!v) return std::nullopt;
    // Verify the mapping is an isomorphism onto the named family member.
    Graph target = f_n(k);
    if (target.m() != g.m()) return std::nullopt;
    for (auto [u, v] : g.edges())
        if (!target.adjacent(mapping[u], mapping[v])) return std::nullopt;
    out_n = k;
    return mapping;
}

}  // namespace

CubicClassification classify_cubic(const Graph& g) {
    if (!is_connected(g))
        throw std::invalid_argument("classify_cubic: graph must be connected");
    if (!degree_profile(g).is_cubic)
        throw std::invalid_argument("classify_cubic: graph must be cubic");
    using Tag = CubicClassification::Tag;
    if (g.n() == 4)
        return {Tag::K4, 0, find_isomorphism(g, complete(4)), std::nullopt};
    if (g.n() == 6) {
        if (auto iso = find_isomorphism(g, complete_bipartite(3, 3)))
            return {Tag::K33, 0, iso, std::nullopt};
        if (auto iso = find_isomorphism(g, co_c6()))
            return {Tag::CoC6, 0, iso, std::nullopt};
    }
    int fn = 0;
    if (auto iso = recognize_f_n(g, fn)) return {Tag::Fn, fn, iso, std::nullopt};
    // Not in the family list: some vertex lies in no strong clique.
    SmallStrongCliques strong = small_strong_cliques(g);
    Bitset covered(g.n());
    for (const auto& p : strong.pairs)
        for (int v : p) covered.set(v);
    for (const auto& t : strong.triangles)
        for (int v : t) covered.set(v);
    for (int v = 0; v < g.n(); ++v)
        if (!covered.test(v))
            return {Tag::NotLocalizable, 0, std::nullopt, v};
    throw std::logic_error(
        "classify_cubic: every vertex is in a strong clique but no family matched");
}

namespace {

struct Route {
    Method method;
    std::optional<RootGraphMap> root;     // when method == LineGraph
    std::optional<RootGraphMap> co_root;  // when method == CoLine
};

Route detect_class(const Graph& g, const SolveOptions& options) {
    if (!has_induced_c4(g)) return {Method::C4Free, std::nullopt, std::nullopt};
    if (auto rec = recognize_line_graph(g); rec.recognized())
        return {Method::LineGraph, std::move(rec.root), std::nullopt};
    if (auto rec = recognize_line_graph(complement(g)); rec.recognized())
        return {Method::CoLine, std::nullopt, std::move(rec.root)};
    if (int(maximum_clique(g).size()) <= options.omega_cap)
        return {Method::BoundedOmega, std::nullopt, std::nullopt};
    return {Method::Oracle, std::nullopt, std::nullopt};
}

void check_oracle_cap(const Graph& g, const SolveOptions& options) {
    if (g.n() > options.oracle_cap)
        throw OracleCapExceeded("oracle fallback refused: " +
                                std::to_string(g.n()) + " vertices exceed cap " +
                                std::to_string(options.oracle_cap));
}

Verdict oracle_extension(const Graph& g, const VertexSet& c,
                         const SolveOptions& options) {
    check_oracle_cap(g, options);
    require_clique(g, c, /*allow_empty=*/true);
    Bitset cb = Bitset::of(g.n(), c);
    for (const auto& cand : maximal_cliques(g)) {
        if (cand.empty()) continue;
        if (!cb.is_subset_of(Bitset::of(g.n(), cand))) continue;
        if (is_strong_clique(g, cand).verdict)
            return extension_verdict(true, Method::Oracle,
                                     strong_clique_cert(cand));
    }
    return extension_verdict(false, Method::Oracle);
}

Verdict extension_with_route(const Graph& g, const Route& route,
                             const VertexSet& c, const SolveOptions& options) {
    switch (route.method) {
        case Method::C4Free: return sce_c4free(g, c);
        case Method::LineGraph: return sce_linegraph_with_root(g, *route.root, c);
        case Method::CoLine: return sce_coline_with_root(g, *route.co_root, c);
        case Method::BoundedOmega:
            return sce_bounded_omega(g, c, options.omega_cap);
        default: return oracle_extension(g, c, options);
    }
}

// Maximal independent set disjoint from the (maximal, non-strong) clique c,
// built by the polynomial construction of the routed class where one exists.
VertexSet disjoint_mis_witness(const Graph& g, const Route& route,
                               const VertexSet& c) {
    switch (route.method) {
        case Method::LineGraph: {
            const RootGraphMap& root = *route.root;
            const Graph& h = root.root;
            EdgeFamilies fam = edge_families(h);
            std::vector<int> ids;
            for (int v : c) {
                Edge e = root.to_edge[v];
                ids.push_back(h.edge_index(e.first, e.second));
            }
            std::sort(ids.begin(), ids.end());
            for (const auto& m : fam.maximal) {
                if (m.edge_ids != ids) continue;
                std::optional<Matching> base;
                std::vector<Edge> blocked;
                for (int id : m.edge_ids) blocked.push_back(h.edges()[id]);
                if (m.kind == EdgeFamilies::Kind::Triangle) {
                    VertexSet tv;
                    for (const auto& e : blocked) {
                        tv.push_back(e.first);
                        tv.push_back(e.second);
                    }
                    std::sort(tv.begin(), tv.end());
                    tv.erase(std::unique(tv.begin(), tv.end()), tv.end());
                    base = find_matching_saturating(h, tv, blocked, 2);
                } else {
                    base = find_matching_saturating(h, h.adj(m.anchor).to_vector(),
                                                    blocked);
                }
                if (!base) break;  // the clique was strong after all
                // Greedily extend to a maximal matching of H avoiding the
                // member's edges; it stays maximal in H itself.
                Bitset used(h.n());
                for (auto [u, v] : base->edges) {
                    used.set(u);
                    used.set(v);
                }
                std::vector<Edge> chosen = base->edges;
                for (const auto& e : h.edges()) {
                    if (used.test(e.first) || used.test(e.second)) continue;
                    if (std::find(blocked.begin(), blocked.end(), e) !=
                        blocked.end())
                        continue;
                    chosen.push_back(e);
                    used.set(e.first);
                    used.set(e.second);
                }
                auto inv = edge_to_vertex(root);
                VertexSet out;
                for (const auto& e : chosen) out.push_back(inv.at(e));
                std::sort(out.begin(), out.end());
                return out;
            }
            break;
        }
        case Method::CoLine: {
            const RootGraphMap& root = *route.co_root;
            EdgeFamilies fam = edge_families(root.root);
            Bitset cb = Bitset::of(g.n(), c);
            auto inv = edge_to_vertex(root);
            for (const auto& m : fam.maximal) {
                VertexSet member = member_as_vertices(root, inv, m.edge_ids);
                if (!Bitset::of(g.n(), member).intersects(cb)) return member;
            }
            break;
        }
        case Method::BoundedOmega:
        case Method::C4Free:
        case Method::Oracle:
        default: {
            if (auto sub = find_dominating_independent_subset(g, c, int(c.size())))
                return extend_to_mis_avoiding(g, *sub, c);
            break;
        }
    }
    // Exhaustive fallback; instances reaching this point are desk scale.
    if (auto mis = find_disjoint_mis(g, c)) return *mis;
    throw std::logic_error("no disjoint maximal independent set exists");
}

Certificate witness_cert(VertexSet mis) {
    return {CertKind::DominatingIndependentSet, {std::move(mis)}};
}

Verdict strong_clique_verdict(const Graph& g, const Route& route,
                              const VertexSet& c, const SolveOptions& options) {
    require_clique(g, c, /*allow_empty=*/false);
    if (!is_maximal_clique(g, c)) {
        // Any vertex adjacent to all of c seeds a disjoint maximal
        // independent set dominating c.
        Bitset common = g.closed(c[0]);
        for (int v : c) common &= g.closed(v);
        int extra = -1;
        common.for_each([&](int v) {
            if (extra < 0 && !std::binary_search(c.begin(), c.end(), v)) extra = v;
        });
        VertexSet mis = extend_to_mis_avoiding(g, {extra}, c);
        return {Problem::StrongClique, false, route.method,
                witness_cert(std::move(mis))};
    }
    Verdict ext = extension_with_route(g, route, c, options);
    if (ext.answer)
        return {Problem::StrongClique, true, ext.method,
                strong_clique_cert(c)};
    return {Problem::StrongClique, false, ext.method,
            witness_cert(disjoint_mis_witness(g, route, c))};
}

int method_rank(Method m) {
    switch (m) {
        case Method::C4Free: return 0;
        case Method::LineGraph: return 1;
        case Method::CoLine: return 2;
        case Method::BoundedOmega: return 3;
        case Method::Alpha2: return 4;
        case Method::Subcubic: return 5;
        case Method::CubicClassification: return 6;
        case Method::Oracle: return 7;
    }
    return 7;
}

Verdict solve_partition_existence(const Graph& g, const SolveOptions& options);

// Localizability of one connected component, routed subcubic -> alpha=2 ->
// complete-graph shortcut -> oracle.
Verdict component_partition_existence(const Graph& comp,
                                      const SolveOptions& options) {
    if (degree_profile(comp).is_subcubic) return localizable_subcubic(comp);
    Graph co = complement(comp);
    if (co.m() > 0 && all_triangles(co).empty()) return localizable_alpha2(comp);
    if (co.m() == 0) {
        // Complete graph: the whole vertex set is its one strong clique.
        VertexSet all(comp.n());
        for (int v = 0; v < comp.n(); ++v) all[v] = v;
        return {Problem::PartitionExistence, true, Method::Oracle,
                Certificate{CertKind::Partition, {all}}};
    }
    check_oracle_cap(comp, options);
    auto exact = localizable_exact(comp);
    std::optional<Certificate> cert;
    if (exact.localizable) cert = Certificate{CertKind::Partition, *exact.partition};
    return {Problem::PartitionExistence, exact.localizable, Method::Oracle, cert};
}

Verdict solve_partition_existence(const Graph& g, const SolveOptions& options) {
    if (g.n() == 0)
        return {Problem::PartitionExistence, true, Method::Subcubic,
                Certificate{CertKind::Partition, {}}};
    std::vector<VertexSet> parts;
    Method method = Method::C4Free;
    bool first = true;
    for (const auto& comp_vertices : connected_components(g)) {
        Graph comp = g.induced(comp_vertices);
        Verdict v = component_partition_existence(comp, options);
        if (first || method_rank(v.method) > method_rank(method)) method = v.method;
        first = false;
        if (!v.answer)
            return {Problem::PartitionExistence, false, v.method, std::nullopt};
        for (const auto& part : v.certificate->sets) {
            VertexSet mapped;
            for (int x : part) mapped.push_back(comp_vertices[x]);
            std::sort(mapped.begin(), mapped.end());
            parts.push_back(mapped);
        }
    }
    std::sort(parts.begin(), parts.end());
    return {Problem::PartitionExistence, true, method,
            Certificate{CertKind::Partition, parts}};
}

Verdict solve_existence(const Graph& g, const SolveOptions& options) {
    if (g.n() == 0)
        return {Problem::Existence, false, Method::C4Free, std::nullopt};
    Method method = Method::C4Free;
    bool first = true;
    for (const auto& comp_vertices : connected_components(g)) {
        Graph comp = g.induced(comp_vertices);
        Route route = detect_class(comp, options);
        Verdict v = extension_with_route(comp, route, {}, options);
        if (first || method_rank(v.method) > method_rank(method)) method = v.method;
        first = false;
        if (v.answer) {
            VertexSet mapped;
            for (int x : v.certificate->sets[0]) mapped.push_back(comp_vertices[x]);
            std::sort(mapped.begin(), mapped.end());
            return {Problem::Existence, true, v.method,
                    strong_clique_cert(mapped)};
        }
    }
    return {Problem::Existence, false, method, std::nullopt};
}

void validate_partition_input(const Graph& g,
                              const std::vector<VertexSet>& parts) {
    std::vector<int> seen(g.n(), 0);
    for (const auto& part : parts) {
        if (part.empty())
            throw std::invalid_argument("partition contains an empty part");
        require_clique(g, part, /*allow_empty=*/false);
        for (int v : part) ++seen[v];
    }
    for (int v = 0; v < g.n(); ++v) {
        if (seen[v] == 0)
            throw std::invalid_argument("partition misses vertex " +
                                        std::to_string(v));
        if (seen[v] > 1)
            throw std::invalid_argument("partition repeats vertex " +
                                        std::to_string(v));
    }
}

}  // namespace

Verdict solve(Problem problem, const Graph& g, const SolveInput& input,
              const SolveOptions& options) {
    switch (problem) {
        case Problem::Extension: {
            VertexSet c = input.clique.value_or(VertexSet{});
            Route route = detect_class(g, options);
            return extension_with_route(g, route, c, options);
        }
        case Problem::StrongClique: {
            if (!input.clique)
                throw std::invalid_argument("strong_clique requires a clique input");
            Route route = detect_class(g, options);
            return strong_clique_verdict(g, route, *input.clique, options);
        }
        case Problem::Existence:
            return solve_existence(g, options);
        case Problem::VertexCover: {
            Route route = detect_class(g, options);
            Method method = route.method;
            for (int v = 0; v < g.n(); ++v) {
                Verdict ext = extension_with_route(g, route, {v}, options);
                method = ext.method;
                if (!ext.answer)
                    return {Problem::VertexCover, false, method, std::nullopt};
            }
            return {Problem::VertexCover, true, method, std::nullopt};
        }
        case Problem::EdgeCover: {
            Route route = detect_class(g, options);
            Method method = route.method;
            for (auto [u, v] : g.edges()) {
                Verdict ext = extension_with_route(g, route, {u, v}, options);
                method = ext.method;
                if (!ext.answer)
                    return {Problem::EdgeCover, false, method, std::nullopt};
            }
            return {Problem::EdgeCover, true, method, std::nullopt};
        }
        case Problem::Partition: {
            if (!input.partition)
                throw std::invalid_argument("partition requires a partition input");
            validate_partition_input(g, *input.partition);
            Route route = detect_class(g, options);
            Method method = route.method;
            for (const auto& part : *input.partition) {
                Verdict v = strong_clique_verdict(g, route, part, options);
                method = v.method;
                if (!v.answer)
                    return {Problem::Partition, false, method, v.certificate};
            }
            return {Problem::Partition, true, method,
                    Certificate{CertKind::Partition, *input.partition}};
        }
        case Problem::PartitionExistence:
            return solve_partition_existence(g, options);
    }
    throw std::invalid_argument("unknown problem");
}

bool certificate_valid(const Graph& g, const Verdict& v, const SolveInput& input) {
    if (!v.certificate) return true;
    const Certificate& cert = *v.certificate;
    switch (cert.kind) {
        case CertKind::StrongClique: {
            if (cert.sets.size() != 1) return false;
            const VertexSet& s = cert.sets[0];
            if (s.empty()) return false;
            if (!is_strong_clique(g, s).verdict) return false;
            if (input.clique) {
                Bitset sb = Bitset::of(g.n(), s);
                for (int x : *input.clique)
                    if (!sb.test(x)) return false;
            }
            return true;
        }
        case CertKind::DominatingIndependentSet: {
            if (cert.sets.size() != 1) return false;
            const VertexSet& s = cert.sets[0];
            for (size_t i = 0; i < s.size(); ++i)
                for (size_t j = i + 1; j < s.size(); ++j)
                    if (g.adjacent(s[i], s[j])) return false;
            // maximal: every vertex outside is adjacent to the set
            Bitset sb = Bitset::of(g.n(), s);
            for (int u = 0; u < g.n(); ++u)
                if (!sb.test(u) && !g.adj(u).intersects(sb)) return false;
            if (input.clique)
                for (int x : *input.clique)
                    if (sb.test(x)) return false;
            return true;
        }
        case CertKind::Partition: {
            std::vector<int> seen(g.n(), 0);
            for (const auto& part : cert.sets) {
                if (v.problem == Problem::PartitionExistence ||
                    v.problem == Problem::Partition) {
                    if (part.empty() || !is_strong_clique(g, part).verdict)
                        return false;
                }
                for (int x : part) ++seen[x];
            }
            for (int x = 0; x < g.n(); ++x)
                if (seen[x] != 1) return false;
            return true;
        }
        case CertKind::Matching: {
            std::vector<int> seen(g.n(), 0);
            for (const auto& pair : cert.sets) {
                if (pair.size() != 2 || !g.adjacent(pair[0], pair[1])) return false;
                ++seen[pair[0]];
                ++seen[pair[1]];
            }
            for (int x = 0; x < g.n(); ++x)
                if (seen[x] > 1) return false;
            return true;
        }
    }
    return false;
}

}  // namespace strongcliques
